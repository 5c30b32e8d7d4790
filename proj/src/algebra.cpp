#include "jfock/algebra.hpp"

#include <json.hpp>

#include <map>
#include <mutex>

namespace jfock {

std::string kind_name(Kind k, int param) {
  switch (k) {
    case Kind::Real: return "real";
    case Kind::Spin: return "spin:" + std::to_string(param);
    case Kind::SymReal: return "sym:" + std::to_string(param);
    case Kind::HermComplex: return "herm:" + std::to_string(param);
  }
  return "?";
}

namespace {

// Matrix model used only while building the structure tensor: each basis
// vector as an exact k x k matrix over Gaussian rationals.
struct MatrixModel {
  int k = 0;
  std::vector<MatG> basis;

  MatG jordan_mul(const MatG& x, const MatG& y) const {
    MatG m = x * y + y * x;
    for (auto& v : m.a) v = v * GRat(rat(1, 2));
    return m;
  }
};

MatG unit_matrix_entry(int k, int i, int j, GRat v) {
  MatG m(k, k);
  m(i, j) = v;
  return m;
}

// entry (i,j) of a Hermitian matrix written in the E/A/S basis
struct HermCoords {
  // index helpers for Sym and Herm bases
  static int sym_dim(int k) { return k * (k + 1) / 2; }
};

PolyG matrix_det_poly(const std::vector<std::vector<PolyG>>& m) {
  int k = int(m.size());
  if (k == 1) return m[0][0];
  PolyG acc(m[0][0].nv);
  for (int j = 0; j < k; ++j) {
    if (m[0][j].is_zero_poly()) continue;
    std::vector<std::vector<PolyG>> sub;
    for (int i = 1; i < k; ++i) {
      std::vector<PolyG> row;
      for (int l = 0; l < k; ++l)
        if (l != j) row.push_back(m[i][l]);
      sub.push_back(std::move(row));
    }
    PolyG cof = m[0][j] * matrix_det_poly(sub);
    if (j % 2) acc -= cof;
    else acc += cof;
  }
  return acc;
}

}  // namespace

AlgebraPtr make_algebra_impl(Kind kind, int param) {
  auto A = std::make_shared<Algebra>();
  A->kind = kind;
  A->param = param;

  if (kind == Kind::Real) {
    A->n = 1; A->r = 1; A->d = 0;
    A->labels = {"1"};
    A->gram = {Rat(1)};
    A->mul_table = {{{{0, Rat(1)}}}};
    A->trace_vec = {Rat(1)};
    A->unit = {A.get(), {Rat(1)}};
    A->frame = {A->unit};
    A->minors = {PolyQ::var(1, 0)};
  } else if (kind == Kind::Spin) {
    int k = param;
    if (k < 3) throw Error("spin factor needs k >= 3");
    A->n = k; A->r = 2; A->d = k - 2;
    A->labels.push_back("e0");
    for (int i = 1; i < k; ++i) A->labels.push_back("e" + std::to_string(i));
    A->gram.assign(k, Rat(2));
    A->mul_table.assign(k, std::vector<std::vector<std::pair<int, Rat>>>(k));
    for (int i = 0; i < k; ++i) {
      A->mul_table[0][i] = {{i, Rat(1)}};
      A->mul_table[i][0] = {{i, Rat(1)}};
    }
    for (int i = 1; i < k; ++i)
      for (int j = 1; j < k; ++j)
        if (i == j) A->mul_table[i][j] = {{0, Rat(1)}};
    A->trace_vec.assign(k, Rat(0));
    A->trace_vec[0] = 2;
    std::vector<Rat> uc(k, Rat(0));
    uc[0] = 1;
    A->unit = {A.get(), uc};
    std::vector<Rat> c1(k, Rat(0)), c2(k, Rat(0));
    c1[0] = rat(1, 2); c1[1] = rat(1, 2);
    c2[0] = rat(1, 2); c2[1] = rat(-1, 2);
    A->frame = {{A.get(), c1}, {A.get(), c2}};
    PolyQ d1 = PolyQ::var(k, 0) + PolyQ::var(k, 1);
    PolyQ d2 = PolyQ::var(k, 0) * PolyQ::var(k, 0);
    for (int i = 1; i < k; ++i) d2 -= PolyQ::var(k, i) * PolyQ::var(k, i);
    A->minors = {d1, d2};
  } else {
    // Sym(k,R) and Herm(k,C) share the matrix-model construction.
    int k = param;
    if (k < 2) throw Error("matrix algebra needs k >= 2");
    bool herm = (kind == Kind::HermComplex);
    MatrixModel mm;
    mm.k = k;
    std::vector<std::pair<int, int>> offdiag;
    for (int i = 0; i < k; ++i) {
      mm.basis.push_back(unit_matrix_entry(k, i, i, GRat(1)));
      A->labels.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
    }
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        MatG a = unit_matrix_entry(k, i, j, GRat(1)) + unit_matrix_entry(k, j, i, GRat(1));
        mm.basis.push_back(a);
        A->labels.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
        offdiag.emplace_back(i, j);
        if (herm) {
          MatG s = unit_matrix_entry(k, i, j, GRat::i_unit()) +
                   unit_matrix_entry(k, j, i, -GRat::i_unit());
          mm.basis.push_back(s);
          A->labels.push_back("S" + std::to_string(i + 1) + std::to_string(j + 1));
        }
      }
    int n = int(mm.basis.size());
    A->n = n;
    A->r = k;
    A->d = herm ? 2 : 1;

    // decompose a Hermitian/symmetric matrix into coordinates
    auto decompose = [&](const MatG& m) {
      std::vector<Rat> c(n, Rat(0));
      int idx = 0;
      for (int i = 0; i < k; ++i) c[idx++] = m(i, i).re;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          c[idx++] = m(i, j).re;
          if (herm) c[idx++] = m(i, j).im;
        }
      return c;
    };

    A->mul_table.assign(n, std::vector<std::vector<std::pair<int, Rat>>>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        auto c = decompose(mm.jordan_mul(mm.basis[a], mm.basis[b]));
        for (int g = 0; g < n; ++g)
          if (!is_zero(c[g])) A->mul_table[a][b].push_back({g, c[g]});
      }

    A->gram.assign(n, Rat(0));
    for (int a = 0; a < n; ++a) {
      GRat tr(0);
      MatG prod = mm.basis[a] * mm.basis[a];
      for (int i = 0; i < k; ++i) tr += prod(i, i);
      A->gram[a] = tr.re;
    }
    A->trace_vec.assign(n, Rat(0));
    for (int i = 0; i < k; ++i) A->trace_vec[i] = 1;
    std::vector<Rat> uc(n, Rat(0));
    for (int i = 0; i < k; ++i) uc[i] = 1;
    A->unit = {A.get(), uc};
    for (int i = 0; i < k; ++i) {
      std::vector<Rat> ci(n, Rat(0));
      ci[i] = 1;
      A->frame.push_back({A.get(), ci});
    }

    // symbolic matrix with coordinate-variable entries; leading minors
    std::vector<std::vector<PolyG>> symb(k, std::vector<PolyG>(k, PolyG(n)));
    {
      int idx = 0;
      for (int i = 0; i < k; ++i) symb[i][i] = complexify(PolyQ::var(n, idx++));
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          PolyG a = complexify(PolyQ::var(n, idx++));
          if (herm) {
            PolyG s = complexify(PolyQ::var(n, idx++));
            symb[i][j] = a + s * GRat::i_unit();
            symb[j][i] = a - s * GRat::i_unit();
          } else {
            symb[i][j] = a;
            symb[j][i] = a;
          }
        }
    }
    for (int j = 1; j <= k; ++j) {
      std::vector<std::vector<PolyG>> lead(j, std::vector<PolyG>(j, PolyG(n)));
      for (int a = 0; a < j; ++a)
        for (int b = 0; b < j; ++b) lead[a][b] = symb[a][b];
      PolyG dj = matrix_det_poly(lead);
      if (!is_real(dj)) throw Error("principal minor not real");
      A->minors.push_back(real_part(dj));
    }
  }

  for (auto& f : A->frame) f.A = A.get();
  A->unit.A = A.get();
  A->validate();
  return A;
}

AlgebraPtr Algebra::make(Kind kind, int param) {
  static std::map<std::pair<Kind, int>, AlgebraPtr> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  auto key = std::make_pair(kind, param);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto A = make_algebra_impl(kind, param);
  cache[key] = A;
  return A;
}

AlgebraPtr Algebra::parse(const std::string& spec) {
  if (spec == "real") return make(Kind::Real, 1);
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error("bad algebra spec: " + spec);
  std::string head = spec.substr(0, colon);
  int k = std::stoi(spec.substr(colon + 1));
  if (head == "spin") return make(Kind::Spin, k);
  if (head == "sym") return make(Kind::SymReal, k);
  if (head == "herm") return make(Kind::HermComplex, k);
  throw Error("bad algebra spec: " + spec);
}

Element Algebra::elem(std::vector<Rat> coords) const {
  if (int(coords.size()) != n) throw Error("coordinate length mismatch");
  return {this, std::move(coords)};
}
CElement Algebra::celem(std::vector<GRat> coords) const {
  if (int(coords.size()) != n) throw Error("coordinate length mismatch");
  return {this, std::move(coords)};
}
CElement Algebra::to_c(const Element& x) const {
  std::vector<GRat> c(n);
  for (int i = 0; i < n; ++i) c[i] = GRat(x.c[i]);
  return {this, std::move(c)};
}
Element Algebra::frame_diag(const std::vector<Rat>& a) const {
  if (int(a.size()) != r) throw RankMismatch();
  Element x = zero();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) x.c[j] += a[i] * frame[i].c[j];
  return x;
}

template <class T>
static std::vector<T> mul_coords(const Algebra& A, const std::vector<T>& x,
                                 const std::vector<T>& y) {
  std::vector<T> out(A.n, T(0));
  for (int i = 0; i < A.n; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < A.n; ++j) {
      if (is_zero(y[j])) continue;
      T f = x[i] * y[j];
      for (auto& [g, c] : A.mul_table[i][j]) out[g] += f * T(c);
    }
  }
  return out;
}

Element Algebra::mul(const Element& x, const Element& y) const {
  check_same(x.A, this);
  check_same(y.A, this);
  return {this, mul_coords(*this, x.c, y.c)};
}
CElement Algebra::mul(const CElement& x, const CElement& y) const {
  check_same(x.A, this);
  check_same(y.A, this);
  return {this, mul_coords(*this, x.c, y.c)};
}

template <class T>
static Mat<T> lmat_coords(const Algebra& A, const std::vector<T>& x) {
  Mat<T> m(A.n, A.n);
  for (int i = 0; i < A.n; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < A.n; ++j)
      for (auto& [g, c] : A.mul_table[i][j]) m(g, j) += x[i] * T(c);
  }
  return m;
}

MatQ Algebra::lmat(const Element& x) const { check_same(x.A, this); return lmat_coords(*this, x.c); }
MatG Algebra::lmat(const CElement& x) const { check_same(x.A, this); return lmat_coords(*this, x.c); }

MatQ Algebra::pmat(const Element& x) const {
  MatQ L = lmat(x);
  return L * L * Rat(2) - lmat(mul(x, x));
}
MatG Algebra::pmat(const CElement& x) const {
  MatG L = lmat(x);
  return L * L * GRat(2) - lmat(mul(x, x));
}
MatQ Algebra::pmat2(const Element& x, const Element& y) const {
  MatQ Lx = lmat(x), Ly = lmat(y);
  return Lx * Ly + Ly * Lx - lmat(mul(x, y));
}
MatG Algebra::pmat2(const CElement& x, const CElement& y) const {
  MatG Lx = lmat(x), Ly = lmat(y);
  return Lx * Ly + Ly * Lx - lmat(mul(x, y));
}
MatQ Algebra::box(const Element& x, const Element& y) const {
  MatQ Lx = lmat(x), Ly = lmat(y);
  return lmat(mul(x, y)) + Lx * Ly - Ly * Lx;
}
MatG Algebra::box(const CElement& x, const CElement& y) const {
  MatG Lx = lmat(x), Ly = lmat(y);
  return lmat(mul(x, y)) + Lx * Ly - Ly * Lx;
}

Rat Algebra::trace(const Element& x) const {
  check_same(x.A, this);
  Rat t(0);
  for (int i = 0; i < n; ++i) t += trace_vec[i] * x.c[i];
  return t;
}
GRat Algebra::trace(const CElement& x) const {
  check_same(x.A, this);
  GRat t(0);
  for (int i = 0; i < n; ++i) t += x.c[i] * GRat(trace_vec[i]);
  return t;
}
Rat Algebra::inner(const Element& x, const Element& y) const {
  check_same(x.A, this);
  check_same(y.A, this);
  Rat t(0);
  for (int i = 0; i < n; ++i) t += gram[i] * x.c[i] * y.c[i];
  return t;
}
GRat Algebra::inner(const CElement& x, const CElement& y) const {
  check_same(x.A, this);
  check_same(y.A, this);
  GRat t(0);
  for (int i = 0; i < n; ++i) t += x.c[i] * y.c[i] * GRat(gram[i]);
  return t;
}
Rat Algebra::det(const Element& x) const {
  check_same(x.A, this);
  return minors[r - 1].eval(x.c);
}
GRat Algebra::det(const CElement& x) const {
  check_same(x.A, this);
  return complexify(minors[r - 1]).eval(x.c);
}
GRat Algebra::principal_minor(int j, const CElement& z) const {
  check_same(z.A, this);
  if (j < 1 || j > r) throw Error("minor index out of range");
  return complexify(minors[j - 1]).eval(z.c);
}

Element Algebra::inverse(const Element& x) const {
  check_same(x.A, this);
  if (is_zero(det(x))) throw SingularElement();
  return {this, solve(pmat(x), x.c)};
}

Element Algebra::power_int(const Element& x, int m) const {
  check_same(x.A, this);
  if (m < 0) throw Error("power_int needs m >= 0");
  Element acc = unit;
  for (int i = 0; i < m; ++i) acc = mul(acc, x);
  return acc;
}

Element Algebra::ek(int k) const {
  if (k < 0 || k > r) throw RankMismatch();
  Element x = zero();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) x.c[j] += frame[i].c[j];
  return x;
}

std::array<MatQ, 3> Algebra::peirce(const Element& c) const {
  check_same(c.A, this);
  if (!(mul(c, c).c == c.c)) throw NotIdempotent();
  MatQ L = lmat(c);
  MatQ L2 = L * L;
  MatQ I = MatQ::identity(n);
  MatQ p1 = L2 * Rat(2) - L;               // t(2t-1)
  MatQ ph = (L - L2) * Rat(4);             // 4t(1-t)
  MatQ p0 = I - L * Rat(3) + L2 * Rat(2);  // (1-t)(1-2t)
  return {p1, ph, p0};
}

std::vector<MatQ> Algebra::derivation_basis() const {
  SpanBasis<Rat> span(n * n);
  std::vector<MatQ> out;
  std::vector<MatQ> lmats;
  for (int a = 0; a < n; ++a) {
    Element ea = zero();
    ea.c[a] = 1;
    lmats.push_back(lmat(ea));
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      MatQ comm = lmats[a] * lmats[b] - lmats[b] * lmats[a];
      if (span.insert(comm.a)) out.push_back(comm);
    }
  return out;
}

std::vector<MatQ> Algebra::structure_basis() const {
  auto out = derivation_basis();
  for (int a = 0; a < n; ++a) {
    Element ea = zero();
    ea.c[a] = 1;
    out.push_back(lmat(ea));
  }
  return out;
}

// ---- numeric helpers -------------------------------------------------------

Eigen::VectorXd Algebra::to_numeric(const Element& x) const {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = x.c[i].get_d();
  return v;
}
Eigen::VectorXcd Algebra::to_numeric(const CElement& x) const {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = to_complex(x.c[i]);
  return v;
}
Eigen::MatrixXd Algebra::gram_numeric() const {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = gram[i].get_d();
  return g;
}
Eigen::VectorXd Algebra::mul_numeric(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (auto& [g, c] : mul_table[i][j]) out[g] += x[i] * y[j] * c.get_d();
    }
  }
  return out;
}
Eigen::VectorXcd Algebra::mul_numeric(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0.0) continue;
      for (auto& [g, c] : mul_table[i][j]) out[g] += x[i] * y[j] * c.get_d();
    }
  }
  return out;
}
Eigen::MatrixXcd Algebra::pmat_numeric(const Eigen::VectorXcd& x) const {
  Eigen::MatrixXcd L(n, n), L2(n, n);
  L.setZero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [g, c] : mul_table[i][j]) L(g, j) += x[i] * c.get_d();
  Eigen::VectorXcd xsq = mul_numeric(x, x);
  L2.setZero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [g, c] : mul_table[i][j]) L2(g, j) += xsq[i] * c.get_d();
  return 2.0 * L * L - L2;
}
double Algebra::trace_numeric(const Eigen::VectorXd& x) const {
  double t = 0;
  for (int i = 0; i < n; ++i) t += trace_vec[i].get_d() * x[i];
  return t;
}
std::complex<double> Algebra::inner_numeric(const Eigen::VectorXcd& x,
                                            const Eigen::VectorXcd& y) const {
  std::complex<double> t = 0;
  for (int i = 0; i < n; ++i) t += gram[i].get_d() * x[i] * y[i];
  return t;
}

// ---- spectral decomposition (numeric, per kind) ----------------------------

Spectral Algebra::spectral(const Element& x) const {
  check_same(x.A, this);
  return spectral_vec(to_numeric(x));
}

Spectral Algebra::spectral_vec(const Eigen::VectorXd& x) const {
  Spectral s;
  s.rot = Eigen::MatrixXd::Identity(n, n);
  if (kind == Kind::Real) {
    s.eig = {x[0]};
    return s;
  }
  if (kind == Kind::Spin) {
    Eigen::VectorXd sp = x.tail(n - 1);
    double rho = sp.norm();
    s.eig = {x[0] + rho, x[0] - rho};
    if (rho > 1e-300) {
      Eigen::VectorXd u = sp / rho;
      Eigen::VectorXd w0 = Eigen::VectorXd::Zero(n - 1);
      w0[0] = 1.0;
      double ct = u.dot(w0);
      Eigen::VectorXd w = u - ct * w0;
      double wn = w.norm();
      Eigen::MatrixXd R = Eigen::MatrixXd::Identity(n - 1, n - 1);
      if (wn > 1e-14) {
        w /= wn;
        double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        R += (ct - 1.0) * (w0 * w0.transpose() + w * w.transpose()) +
             st * (w * w0.transpose() - w0 * w.transpose());
      } else if (ct < 0) {
        R(0, 0) = -1.0;
        if (n - 1 > 1) R(1, 1) = -1.0;
      }
      s.rot.block(1, 1, n - 1, n - 1) = R;
    }
    return s;
  }
  int k = param;
  if (kind == Kind::SymReal) {
    Eigen::MatrixXd M(k, k);
    int idx = k;
    for (int i = 0; i < k; ++i) M(i, i) = x[i];
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) { M(i, j) = M(j, i) = x[idx++]; }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    Eigen::VectorXd ev = es.eigenvalues();
    Eigen::MatrixXd Q = es.eigenvectors();
    std::vector<int> ord(k);
    for (int i = 0; i < k; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return ev[a] > ev[b]; });
    Eigen::MatrixXd Qs(k, k);
    s.eig.resize(k);
    for (int i = 0; i < k; ++i) {
      s.eig[i] = ev[ord[i]];
      Qs.col(i) = Q.col(ord[i]);
    }
    // coordinate matrix of y -> Qs y Qs^T
    auto to_mat = [&](const Eigen::VectorXd& v) {
      Eigen::MatrixXd m(k, k);
      int id2 = k;
      for (int i = 0; i < k; ++i) m(i, i) = v[i];
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) { m(i, j) = m(j, i) = v[id2++]; }
      return m;
    };
    auto to_vec = [&](const Eigen::MatrixXd& m) {
      Eigen::VectorXd v(n);
      int id2 = k;
      for (int i = 0; i < k; ++i) v[i] = m(i, i);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) v[id2++] = m(i, j);
      return v;
    };
    for (int b = 0; b < n; ++b) {
      Eigen::VectorXd eb = Eigen::VectorXd::Zero(n);
      eb[b] = 1.0;
      s.rot.col(b) = to_vec(Qs * to_mat(eb) * Qs.transpose());
    }
    return s;
  }
  // HermComplex
  Eigen::MatrixXcd M(k, k);
  {
    int idx = k;
    for (int i = 0; i < k; ++i) M(i, i) = x[i];
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        std::complex<double> z(x[idx], x[idx + 1]);
        idx += 2;
        M(i, j) = z;
        M(j, i) = std::conj(z);
      }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  Eigen::VectorXd ev = es.eigenvalues();
  Eigen::MatrixXcd U = es.eigenvectors();
  std::vector<int> ord(k);
  for (int i = 0; i < k; ++i) ord[i] = i;
  std::sort(ord.begin(), ord.end(), [&](int a, int b) { return ev[a] > ev[b]; });
  Eigen::MatrixXcd Us(k, k);
  s.eig.resize(k);
  for (int i = 0; i < k; ++i) {
    s.eig[i] = ev[ord[i]];
    Us.col(i) = U.col(ord[i]);
  }
  auto to_mat = [&](const Eigen::VectorXd& v) {
    Eigen::MatrixXcd m(k, k);
    int idx = k;
    for (int i = 0; i < k; ++i) m(i, i) = v[i];
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        std::complex<double> z(v[idx], v[idx + 1]);
        idx += 2;
        m(i, j) = z;
        m(j, i) = std::conj(z);
      }
    return m;
  };
  auto to_vec = [&](const Eigen::MatrixXcd& m) {
    Eigen::VectorXd v(n);
    int idx = k;
    for (int i = 0; i < k; ++i) v[i] = m(i, i).real();
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        v[idx] = m(i, j).real();
        v[idx + 1] = m(i, j).imag();
        idx += 2;
      }
    return v;
  };
  for (int b = 0; b < n; ++b) {
    Eigen::VectorXd eb = Eigen::VectorXd::Zero(n);
    eb[b] = 1.0;
    s.rot.col(b) = to_vec(Us * to_mat(eb) * Us.adjoint());
  }
  return s;
}

Element Algebra::power(const Element& x, double sexp) const {
  check_same(x.A, this);
  Spectral s = spectral(x);
  for (double a : s.eig) {
    if (a < -1e-10) throw NegativeEigenvalue();
    if (sexp < 0 && a < 1e-12) throw NegativeEigenvalue("negative power of singular element");
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < r; ++i) {
    double a = std::max(0.0, s.eig[i]);
    double as = (a == 0.0 && sexp == 0.0) ? 1.0 : std::pow(a, sexp);
    diag += as * to_numeric(frame[i]);
  }
  Eigen::VectorXd y = s.rot * diag;
  std::vector<Rat> c(n);
  for (int i = 0; i < n; ++i) c[i] = Rat(y[i]);
  return {this, std::move(c)};
}

// ---- validation ------------------------------------------------------------

void Algebra::validate() const {
  struct Expect { int n, r, d; };
  Expect ex{};
  switch (kind) {
    case Kind::Real: ex = {1, 1, 0}; break;
    case Kind::Spin: ex = {param, 2, param - 2}; break;
    case Kind::SymReal: ex = {param * (param + 1) / 2, param, 1}; break;
    case Kind::HermComplex: ex = {param * param, param, 2}; break;
  }
  if (n != ex.n || r != ex.r || d != ex.d) throw Error("structure constants disagree with table");
  if (2 * n != 2 * r + r * (r - 1) * d) throw Error("dimension formula violated");

  std::vector<Element> basis;
  for (int i = 0; i < n; ++i) {
    Element e0 = {this, std::vector<Rat>(n, Rat(0))};
    e0.c[i] = 1;
    basis.push_back(e0);
  }
  // unit and commutativity
  for (int i = 0; i < n; ++i) {
    if (!(mul(unit, basis[i]).c == basis[i].c)) throw Error("unit axiom violated");
    for (int j = 0; j < i; ++j)
      if (!(mul(basis[i], basis[j]).c == mul(basis[j], basis[i]).c))
        throw Error("commutativity violated");
  }
  // Jordan identity, polarized: cubic in x, so sums of up to three basis
  // vectors together with all basis y decide it.
  std::vector<Element> xs = basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Element x = basis[i];
      x.c[j] = 1;
      xs.push_back(x);
      for (int k = j + 1; k < n; ++k) {
        Element x3 = x;
        x3.c[k] = 1;
        xs.push_back(x3);
      }
    }
  for (auto& x : xs) {
    Element x2 = mul(x, x);
    for (int j = 0; j < n; ++j) {
      Element lhs = mul(x2, mul(x, basis[j]));
      Element rhs = mul(x, mul(x2, basis[j]));
      if (!(lhs.c == rhs.c)) throw Error("Jordan identity violated");
    }
  }
  // frame
  {
    Element sum = zero();
    for (int i = 0; i < r; ++i) {
      if (!(mul(frame[i], frame[i]).c == frame[i].c)) throw Error("frame idempotency violated");
      for (int j = 0; j < i; ++j)
        if (!(mul(frame[i], frame[j]).c == zero().c)) throw Error("frame orthogonality violated");
      for (int j = 0; j < n; ++j) sum.c[j] += frame[i].c[j];
    }
    if (!(sum.c == unit.c)) throw Error("frame does not sum to unit");
  }
  // sum of squares identity with the Gram correction:
  // sum_a (G^-1)_aa e_a^2 = (n/r) e
  {
    Element acc = zero();
    for (int i = 0; i < n; ++i) {
      Element sq = mul(basis[i], basis[i]);
      for (int j = 0; j < n; ++j) acc.c[j] += sq.c[j] / gram[i];
    }
    Element target = unit;
    for (int j = 0; j < n; ++j)
      if (acc.c[j] != target.c[j] * rat(n, r)) throw Error("sum-of-squares identity violated");
  }
  // minors at the unit
  for (int j = 0; j < r; ++j)
    if (minors[j].eval(unit.c) != Rat(1)) throw Error("minor not normalized at unit");
  if (trace(unit) != Rat(r)) throw Error("trace of unit != rank");
}

std::string Algebra::catalog_json() const {
  nlohmann::json j;
  j["kind"] = name();
  j["n"] = n;
  j["r"] = r;
  j["d"] = d;
  j["basis"] = labels;
  std::vector<std::string> g;
  for (auto& q : gram) g.push_back(q.get_str());
  j["gram"] = g;
  nlohmann::json st = nlohmann::json::array();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (auto& [g2, c] : mul_table[a][b]) {
        st.push_back({{"i", a}, {"j", b}, {"k", g2}, {"c", c.get_str()}});
      }
  j["structure_tensor"] = st;
  nlohmann::json fr = nlohmann::json::array();
  for (auto& f : frame) {
    std::vector<std::string> fc;
    for (auto& q : f.c) fc.push_back(q.get_str());
    fr.push_back(fc);
  }
  j["frame"] = fr;
  return j.dump();
}

}  // namespace jfock
