#include "jfock/polyengine.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace jfock {

struct PolyCaches {
  std::shared_mutex mtx;
  std::map<Partition, KTypeBasis> ktypes;
  std::map<Partition, PolyQ> phis;
  std::map<Partition, std::map<Partition, Rat>> binoms;
  std::vector<MatQ> der_gens, str_gens;
  std::map<int, MonoIndex> mono_index;
  bool gens_ready = false;
};

namespace {

PolyCaches& caches_of(const Algebra& A) {
  static std::mutex create_mtx;
  if (!A.caches) {
    std::lock_guard<std::mutex> lk(create_mtx);
    if (!A.caches) A.caches = std::make_shared<PolyCaches>();
  }
  return *A.caches;
}

const MonoIndex& mono_index_of(const Algebra& A, int deg) {
  auto& C = caches_of(A);
  {
    std::shared_lock lk(C.mtx);
    auto it = C.mono_index.find(deg);
    if (it != C.mono_index.end()) return it->second;
  }
  MonoIndex mi = MonoIndex::of_degree(A.n, deg);
  std::unique_lock lk(C.mtx);
  return C.mono_index.emplace(deg, std::move(mi)).first->second;
}

void ensure_generators(const Algebra& A) {
  auto& C = caches_of(A);
  {
    std::shared_lock lk(C.mtx);
    if (C.gens_ready) return;
  }
  auto der = A.derivation_basis();
  auto str = A.structure_basis();
  std::unique_lock lk(C.mtx);
  if (!C.gens_ready) {
    C.der_gens = std::move(der);
    C.str_gens = std::move(str);
    C.gens_ready = true;
  }
}

using SparseMat = std::vector<std::vector<std::pair<int, Rat>>>;

SparseMat sparsify(const MatQ& T) {
  SparseMat s(T.rows);
  for (int i = 0; i < T.rows; ++i)
    for (int j = 0; j < T.cols; ++j)
      if (!is_zero(T(i, j))) s[i].push_back({j, T(i, j)});
  return s;
}

// dense-coefficient action of sum_ij T_ij x_j d/dx_i on a fixed-degree slice
std::vector<Rat> act_dense(const Algebra& A, const SparseMat& T, const MonoIndex& mi,
                           const std::vector<Rat>& v) {
  std::vector<Rat> out(mi.size(), Rat(0));
  for (int idx = 0; idx < mi.size(); ++idx) {
    if (is_zero(v[idx])) continue;
    const Mono& m = mi.monos[idx];
    for (int i = 0; i < A.n; ++i) {
      if (m.e[i] == 0 || T[i].empty()) continue;
      Rat base = v[idx] * int(m.e[i]);
      for (auto& [j, tij] : T[i]) {
        Mono m2 = m;
        m2.e[i] -= 1;
        m2.e[j] += 1;
        out[mi.index.at(m2)] += base * tij;
      }
    }
  }
  return out;
}

}  // namespace

PolyQ delta_m(const Algebra& A, const Partition& m) {
  if (m.rank() != A.r || !m.valid()) throw RankMismatch("partition rank mismatch");
  PolyQ p = PolyQ::one(A.n);
  for (int j = 0; j < A.r; ++j) {
    int expo = m.parts[j] - (j + 1 < A.r ? m.parts[j + 1] : 0);
    if (expo > 0) p = p * A.minors[j].pow(expo);
  }
  return p;
}

const KTypeBasis& ktype_basis(const Algebra& A, const Partition& m, int degree_cap) {
  if (m.weight() > degree_cap) throw DegreeCapExceeded();
  auto& C = caches_of(A);
  {
    std::shared_lock lk(C.mtx);
    auto it = C.ktypes.find(m);
    if (it != C.ktypes.end()) return it->second;
  }
  ensure_generators(A);
  const MonoIndex& mi = mono_index_of(A, m.weight());
  std::vector<SparseMat> gens;
  {
    std::shared_lock lk(C.mtx);
    for (auto& T : C.str_gens) gens.push_back(sparsify(T));
  }

  SpanBasis<Rat> span(mi.size());
  std::deque<std::vector<Rat>> pending;
  {
    std::vector<Rat> v0 = mi.to_vec(delta_m(A, m));
    std::vector<Rat> v0c = v0;
    span.insert(std::move(v0));
    pending.push_back(std::move(v0c));
  }
  while (!pending.empty()) {
    std::vector<Rat> v = std::move(pending.front());
    pending.pop_front();
    for (auto& T : gens) {
      std::vector<Rat> w = act_dense(A, T, mi, v);
      std::vector<Rat> w_copy = w;
      if (span.insert(std::move(w))) pending.push_back(std::move(w_copy));
    }
  }

  KTypeBasis kt;
  kt.m = m;
  for (auto& row : span.rows) kt.basis.push_back(mi.to_poly(row, A.n));
  int dm = kt.dim();
  kt.gram = MatQ(dm, dm);
  for (int i = 0; i < dm; ++i)
    for (int j = i; j < dm; ++j) {
      kt.gram(i, j) = fischer(A, kt.basis[i], kt.basis[j]);
      kt.gram(j, i) = kt.gram(i, j);
    }

  std::unique_lock lk(C.mtx);
  return C.ktypes.emplace(m, std::move(kt)).first->second;
}

Rat ktype_dim(const Algebra& A, const Partition& m, int degree_cap) {
  return Rat(ktype_basis(A, m, degree_cap).dim());
}

const PolyQ& spherical_phi(const Algebra& A, const Partition& m, int degree_cap) {
  auto& C = caches_of(A);
  {
    std::shared_lock lk(C.mtx);
    auto it = C.phis.find(m);
    if (it != C.phis.end()) return it->second;
  }
  const KTypeBasis& kt = ktype_basis(A, m, degree_cap);
  const MonoIndex& mi = mono_index_of(A, m.weight());
  std::vector<SparseMat> ders;
  {
    std::shared_lock lk(C.mtx);
    for (auto& T : C.der_gens) ders.push_back(sparsify(T));
  }
  int dm = kt.dim();
  std::vector<std::vector<Rat>> cols;
  for (auto& b : kt.basis) cols.push_back(mi.to_vec(b));
  PolyQ phi(A.n);
  if (ders.empty()) {
    // rank-1 algebra: no derivations, P_m itself is one-dimensional
    if (dm != 1) throw NonUniqueInvariant();
    phi = kt.basis[0];
  } else {
    Mat<Rat> sys(int(ders.size()) * mi.size(), dm);
    for (int g = 0; g < int(ders.size()); ++g)
      for (int j = 0; j < dm; ++j) {
        auto w = act_dense(A, ders[g], mi, cols[j]);
        for (int i = 0; i < mi.size(); ++i) sys(g * mi.size() + i, j) = w[i];
      }
    auto null = nullspace(sys);
    if (int(null.size()) != 1)
      throw NonUniqueInvariant("invariant space dimension " + std::to_string(null.size()));
    for (int j = 0; j < dm; ++j)
      if (!is_zero(null[0][j])) phi += kt.basis[j] * null[0][j];
  }
  Rat at_e = phi.eval(A.unit.c);
  if (is_zero(at_e)) throw NonUniqueInvariant("spherical vector vanishes at unit");
  phi = phi * (Rat(1) / at_e);

  std::unique_lock lk(C.mtx);
  return C.phis.emplace(m, std::move(phi)).first->second;
}

// Fischer product with the diagonal Gram correction:
// [p,q] = sum_a p_a conj(q_a) a! / prod_alpha gram_alpha^{a_alpha}.
template <class T>
static T fischer_impl(const Algebra& A, const Poly<T>& p, const Poly<T>& q) {
  T acc(0);
  for (auto& [m, c] : p.t) {
    auto it = q.t.find(m);
    if (it == q.t.end()) continue;
    Rat f(1);
    for (int i = 0; i < A.n; ++i)
      for (int k = 1; k <= m.e[i]; ++k) f *= Rat(k) / A.gram[i];
    acc += c * conj_of(it->second) * T(f);
  }
  return acc;
}

Rat fischer(const Algebra& A, const PolyQ& p, const PolyQ& q) { return fischer_impl(A, p, q); }
GRat fischer(const Algebra& A, const PolyG& p, const PolyG& q) { return fischer_impl(A, p, q); }

// ---- factored points ---------------------------------------------------------

MatG factored_matrix(const Algebra& A, const FactoredPointExact& w) {
  if (int(w.sqrt_a.size()) != A.r) throw RankMismatch();
  Element root = A.frame_diag(w.sqrt_a);
  MatQ p = A.pmat(root);
  MatG out(A.n, A.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) out(i, j) = GRat(p(i, j));
  if (w.u.rows == A.n) out = out * inverse(w.u);
  return out;
}

Eigen::MatrixXcd factored_matrix(const Algebra& A, const FactoredPoint& w) {
  if (int(w.a.size()) != A.r) throw RankMismatch();
  for (double v : w.a)
    if (v < 0) throw NotInClosedCone();
  Eigen::VectorXcd root = Eigen::VectorXcd::Zero(A.n);
  for (int i = 0; i < A.r; ++i) root += std::sqrt(w.a[i]) * A.to_numeric(A.frame[i]);
  Eigen::MatrixXcd p = A.pmat_numeric(root);
  if (w.u.rows() == A.n) return p * w.u.inverse();
  return p;
}

std::complex<double> spherical_phi2(const Algebra& A, const Partition& m,
                                    const Eigen::VectorXcd& z, const FactoredPoint& w,
                                    int degree_cap) {
  Eigen::VectorXcd v = factored_matrix(A, w) * z;
  std::vector<std::complex<double>> coords(A.n);
  for (int i = 0; i < A.n; ++i) coords[i] = v[i];
  return spherical_phi(A, m, degree_cap).eval(coords);
}

GRat spherical_phi2_exact(const Algebra& A, const Partition& m, const CElement& z,
                          const FactoredPointExact& w, int degree_cap) {
  auto v = factored_matrix(A, w).apply(z.c);
  return complexify(spherical_phi(A, m, degree_cap)).eval(v);
}

PolyG phi2_poly_in_z(const Algebra& A, const Partition& m, const FactoredPointExact& w,
                     int degree_cap) {
  return complexify(spherical_phi(A, m, degree_cap)).subst(factored_matrix(A, w));
}

// ---- Pochhammer, Wallach set --------------------------------------------------

Rat pochhammer(const Algebra& A, const Rat& lambda, const Partition& m) {
  if (m.rank() != A.r) throw RankMismatch();
  Rat p(1);
  for (int i = 0; i < A.r; ++i) p *= poch1(lambda - rat(i * A.d, 2), m.parts[i]);
  return p;
}

double pochhammer_d(const Algebra& A, double lambda, const Partition& m) {
  double p = 1;
  for (int i = 0; i < A.r; ++i) {
    double a = lambda - 0.5 * i * A.d;
    for (int k = 0; k < m.parts[i]; ++k) p *= a + k;
  }
  return p;
}

WallachPoint wallach(const Algebra& A, const Rat& lambda) {
  if (sgn(lambda) < 0) throw NotInWallachSet();
  Rat edge = rat(long(A.r - 1) * A.d, 2);
  if (lambda > edge) return {lambda, A.r, false};
  if (A.d == 0) {
    if (is_zero(lambda)) return {lambda, 0, true};
    return {lambda, A.r, false};
  }
  Rat k2 = 2 * lambda / A.d;
  if (k2.get_den() == 1) {
    long k = k2.get_num().get_si();
    if (k >= 0 && k <= A.r - 1) return {lambda, int(k), true};
  }
  throw NotInWallachSet("lambda = " + lambda.get_str());
}

std::vector<Rat> wallach_discrete(const Algebra& A) {
  std::vector<Rat> out;
  out.push_back(Rat(0));
  if (A.d > 0)
    for (int k = 1; k <= A.r - 1; ++k) out.push_back(rat(long(k) * A.d, 2));
  return out;
}

std::vector<Partition> admissible_partitions(const Algebra& A, int k, int max_weight) {
  std::vector<Partition> out;
  for (auto& m : partitions_up_to(A.r, max_weight))
    if (m.admissible(k)) out.push_back(m);
  return out;
}

// ---- HKS projection and invariant expansion -----------------------------------

std::map<Partition, PolyQ> hks_components(const Algebra& A, const PolyQ& p, int degree_cap) {
  std::map<Partition, PolyQ> out;
  for (int Dg = 0; Dg <= p.degree(); ++Dg) {
    PolyQ h = p.homogeneous_part(Dg);
    if (h.is_zero_poly()) continue;
    if (Dg > degree_cap) throw DegreeCapExceeded();
    std::vector<Partition> parts;
    partitions_of_weight(A.r, Dg, parts);
    const MonoIndex& mi = mono_index_of(A, Dg);
    std::vector<std::pair<Partition, int>> col_of;
    int ncols = 0;
    for (auto& s : parts) {
      const KTypeBasis& kt = ktype_basis(A, s, degree_cap);
      for (int j = 0; j < kt.dim(); ++j) col_of.push_back({s, j});
      ncols += kt.dim();
    }
    Mat<Rat> sys(mi.size(), ncols);
    {
      int c = 0;
      for (auto& s : parts) {
        const KTypeBasis& kt = ktype_basis(A, s, degree_cap);
        for (auto& b : kt.basis) {
          auto v = mi.to_vec(b);
          for (int i = 0; i < mi.size(); ++i) sys(i, c) = v[i];
          ++c;
        }
      }
    }
    auto x = solve(sys, mi.to_vec(h));
    for (int c = 0; c < ncols; ++c) {
      if (is_zero(x[c])) continue;
      auto& [s, j] = col_of[c];
      auto it = out.find(s);
      if (it == out.end()) it = out.emplace(s, PolyQ(A.n)).first;
      it->second += ktype_basis(A, s, degree_cap).basis[j] * x[c];
    }
  }
  return out;
}

std::map<Partition, Rat> invariant_in_phi_basis(const Algebra& A, const PolyQ& p,
                                                int degree_cap) {
  std::map<Partition, Rat> out;
  for (int Dg = 0; Dg <= p.degree(); ++Dg) {
    PolyQ h = p.homogeneous_part(Dg);
    if (h.is_zero_poly()) continue;
    if (Dg > degree_cap) throw DegreeCapExceeded();
    std::vector<Partition> parts;
    partitions_of_weight(A.r, Dg, parts);
    const MonoIndex& mi = mono_index_of(A, Dg);
    Mat<Rat> sys(mi.size(), int(parts.size()));
    for (int c = 0; c < int(parts.size()); ++c) {
      auto v = mi.to_vec(spherical_phi(A, parts[c], degree_cap));
      for (int i = 0; i < mi.size(); ++i) sys(i, c) = v[i];
    }
    std::vector<Rat> x;
    try {
      x = solve(sys, mi.to_vec(h));
    } catch (const SingularElement&) {
      throw ExpansionFailed("polynomial is not K^L-invariant");
    }
    for (int c = 0; c < int(parts.size()); ++c)
      if (!is_zero(x[c])) out[parts[c]] = x[c];
  }
  return out;
}

// ---- binomials and Laguerre ----------------------------------------------------

std::map<Partition, Rat> binomials(const Algebra& A, const Partition& m, int degree_cap) {
  auto& C = caches_of(A);
  {
    std::shared_lock lk(C.mtx);
    auto it = C.binoms.find(m);
    if (it != C.binoms.end()) return it->second;
  }
  const PolyQ& phi = spherical_phi(A, m, degree_cap);
  std::vector<Rat> e(A.unit.c);
  PolyQ shifted = phi.shift(e);
  auto coeffs = invariant_in_phi_basis(A, shifted, degree_cap);
  std::unique_lock lk(C.mtx);
  C.binoms[m] = coeffs;
  return coeffs;
}

PolyQ laguerre_poly(const Algebra& A, const Partition& m, const Rat& lambda, int degree_cap) {
  WallachPoint wp = wallach(A, lambda);
  Rat lm = pochhammer(A, lambda, m);
  auto bin = binomials(A, m, degree_cap);
  PolyQ acc(A.n);
  for (auto& [nn, c] : bin) {
    Rat ln = pochhammer(A, lambda, nn);
    if (is_zero(ln)) {
      // At discrete lambda the sum is restricted to partitions with
      // n_{k+1} = 0; the dropped Phi_n vanish on the orbit closure.
      if (nn.admissible(wp.orbit)) throw PoleInCoefficient();
      continue;
    }
    PolyQ phin = spherical_phi(A, nn, degree_cap);
    PolyQ neg(A.n);
    for (auto& [mono, cc] : phin.t) neg.add_term(mono, (mono.deg() % 2) ? -cc : cc);
    acc += neg * (c / ln);
  }
  return acc * lm;
}

Rat laguerre_poly_value(const Algebra& A, const Partition& m, const Rat& lambda,
                        const Element& x, int degree_cap) {
  std::vector<Rat> x2(x.c);
  for (auto& v : x2) v *= 2;
  return laguerre_poly(A, m, lambda, degree_cap).eval(x2);
}

double laguerre_func_value(const Algebra& A, const Partition& m, const Rat& lambda,
                           const Eigen::VectorXd& x, int degree_cap) {
  PolyQ L = laguerre_poly(A, m, lambda, degree_cap);
  std::vector<double> x2(A.n);
  for (int i = 0; i < A.n; ++i) x2[i] = 2 * x[i];
  double tr = A.trace_numeric(x);
  return std::exp(-tr) * L.eval(x2);
}

}  // namespace jfock
