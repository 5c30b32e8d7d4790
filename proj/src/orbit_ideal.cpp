#include "jfock/orbit_ideal.hpp"

#include "jfock/models.hpp"

namespace jfock {

namespace {

// symbolic matrix of coordinate variables for Sym(k)/Herm(k)
std::vector<std::vector<PolyG>> symbolic_matrix(const Algebra& A) {
  int k = A.param;
  bool herm = A.kind == Kind::HermComplex;
  std::vector<std::vector<PolyG>> m(k, std::vector<PolyG>(k, PolyG(A.n)));
  int idx = 0;
  for (int i = 0; i < k; ++i) m[i][i] = complexify(PolyQ::var(A.n, idx++));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      PolyG a = complexify(PolyQ::var(A.n, idx++));
      if (herm) {
        PolyG s = complexify(PolyQ::var(A.n, idx++));
        m[i][j] = a + s * GRat::i_unit();
        m[j][i] = a - s * GRat::i_unit();
      } else {
        m[i][j] = m[j][i] = a;
      }
    }
  return m;
}

PolyG minor_det(const std::vector<std::vector<PolyG>>& m, const std::vector<int>& rows,
                const std::vector<int>& cols) {
  int s = int(rows.size());
  if (s == 1) return m[rows[0]][cols[0]];
  PolyG acc(m[0][0].nv);
  for (int j = 0; j < s; ++j) {
    std::vector<int> subc;
    for (int l = 0; l < s; ++l)
      if (l != j) subc.push_back(cols[l]);
    std::vector<int> subr(rows.begin() + 1, rows.end());
    PolyG cof = m[rows[0]][cols[j]] * minor_det(m, subr, subc);
    if (j % 2) acc -= cof;
    else acc += cof;
  }
  return acc;
}

void subsets(int n, int s, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(s);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == s) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

OrbitIdeal::OrbitIdeal(const Algebra& A, int k) : A_(&A), k_(k) {
  if (k < 0 || k > A.r) throw RankMismatch();
  if (k == A.r) return;  // zero ideal, X_r-bar = V_C
  if (k == 0) {
    for (int i = 0; i < A.n; ++i) gens_.push_back(complexify(PolyQ::var(A.n, i)));
    return;
  }
  if (A.kind == Kind::Spin) {
    gens_.push_back(complexify(A.minors[1]));  // the determinant
    return;
  }
  if (A.kind == Kind::SymReal || A.kind == Kind::HermComplex) {
    auto m = symbolic_matrix(A);
    std::vector<std::vector<int>> subs;
    subsets(A.param, k + 1, subs);
    bool herm = A.kind == Kind::HermComplex;
    for (size_t a = 0; a < subs.size(); ++a)
      for (size_t b = 0; b < subs.size(); ++b) {
        if (!herm && b < a) continue;  // symmetric matrix: minor(R,C) = minor(C,R)
        gens_.push_back(minor_det(m, subs[a], subs[b]));
      }
    return;
  }
  throw UnsupportedGroup("no orbit ideal for this algebra kind");
}

const SpanBasis<GRat>& OrbitIdeal::slice(int degree) const {
  std::lock_guard<std::mutex> lk(mtx_);
  auto it = slices_.find(degree);
  if (it != slices_.end()) return it->second;
  MonoIndex mi = MonoIndex::of_degree(A_->n, degree);
  SpanBasis<GRat> span(mi.size());
  for (auto& g : gens_) {
    int gd = g.degree();
    if (gd > degree) continue;
    MonoIndex rest = MonoIndex::of_degree(A_->n, degree - gd);
    for (auto& mono : rest.monos) {
      PolyG mg(A_->n);
      mg.t[mono] = GRat(1);
      span.insert(mi.to_vec(mg * g));
    }
  }
  return slices_.emplace(degree, std::move(span)).first->second;
}

PolyG OrbitIdeal::reduce(const PolyG& p) const {
  if (gens_.empty()) return p;
  PolyG out(A_->n);
  for (int d = 0; d <= p.degree(); ++d) {
    PolyG h = p.homogeneous_part(d);
    if (h.is_zero_poly()) continue;
    MonoIndex mi = MonoIndex::of_degree(A_->n, d);
    auto v = mi.to_vec(h);
    slice(d).reduce(v);
    out += mi.to_poly(v, A_->n);
  }
  return out;
}

PolyQ OrbitIdeal::reduce_real(const PolyQ& p) const {
  PolyG red = reduce(complexify(p));
  if (!is_real(red)) throw Error("reduction of a real polynomial came out complex");
  return real_part(red);
}

bool OrbitIdeal::annihilates(const DiffOpG& op) const {
  for (auto& [de, c] : op.terms)
    if (!contains(c)) return false;
  return true;
}

const OrbitIdeal& orbit_ideal(const Algebra& A, int k) {
  static std::mutex mtx;
  static std::map<std::pair<const Algebra*, int>, std::unique_ptr<OrbitIdeal>> cache;
  std::lock_guard<std::mutex> lk(mtx);
  auto key = std::make_pair(&A, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<OrbitIdeal>(A, k)).first;
  return *it->second;
}

TangentialityReport tangentiality_check(const Algebra& A, int k, int degree_cap) {
  TangentialityReport rep;
  rep.orbit = k;
  rep.degree_cap = degree_cap;
  const OrbitIdeal& I = orbit_ideal(A, k);
  Rat lambda = rat(long(k) * A.d, 2);
  auto B = bessel_op(A, lambda);
  std::vector<DiffOpG> Bc;
  for (auto& b : B) Bc.push_back(complexify(b));
  for (auto& g : I.generators()) {
    int gd = g.degree();
    for (int extra = 0; gd + extra <= degree_cap; ++extra) {
      MonoIndex mi = MonoIndex::of_degree(A.n, extra);
      for (auto& mono : mi.monos) {
        PolyG mg(A.n);
        mg.t[mono] = GRat(1);
        PolyG q = mg * g;
        for (int comp = 0; comp < A.n; ++comp) {
          ++rep.checked;
          if (!I.contains(Bc[comp].apply(q)))
            rep.failures.push_back("component " + std::to_string(comp) + " on degree " +
                                   std::to_string(gd + extra));
        }
      }
    }
  }
  return rep;
}

}  // namespace jfock
