#include "jfock/coalgebra.hpp"

namespace jfock {

namespace {
MatG to_g(const MatQ& m) {
  MatG out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = GRat(m.a[i]);
  return out;
}
std::vector<GRat> zero_vec(int n) { return std::vector<GRat>(n, GRat(0)); }
}  // namespace

CoElement co_element(const Algebra& A, const CElement& u, const MatG& T, const CElement& v) {
  check_same(u.A, &A);
  check_same(v.A, &A);
  return {&A, u.c, T, v.c};
}
CoElement co_zero(const Algebra& A) { return {&A, zero_vec(A.n), MatG(A.n, A.n), zero_vec(A.n)}; }
CoElement co_n(const Algebra& A, const CElement& u) {
  check_same(u.A, &A);
  return {&A, u.c, MatG(A.n, A.n), zero_vec(A.n)};
}
CoElement co_l(const Algebra& A, const MatG& T) { return {&A, zero_vec(A.n), T, zero_vec(A.n)}; }
CoElement co_nbar(const Algebra& A, const CElement& v) {
  check_same(v.A, &A);
  return {&A, zero_vec(A.n), MatG(A.n, A.n), v.c};
}

CoElement co_add(const CoElement& x, const CoElement& y) {
  check_same(x.A, y.A);
  CoElement z = x;
  for (int i = 0; i < x.A->n; ++i) {
    z.u[i] += y.u[i];
    z.v[i] += y.v[i];
  }
  z.T = z.T + y.T;
  return z;
}
CoElement co_scale(const CoElement& x, const GRat& s) {
  CoElement z = x;
  for (auto& c : z.u) c *= s;
  for (auto& c : z.v) c *= s;
  z.T = z.T * s;
  return z;
}
bool co_equal(const CoElement& x, const CoElement& y) {
  return x.A == y.A && x.u == y.u && x.v == y.v && x.T == y.T;
}

MatG sharp(const Algebra& A, const MatG& T) {
  // G^{-1} T^t G with diagonal G; no conjugation (C-bilinear form)
  MatG out(A.n, A.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) out(i, j) = T(j, i) * GRat(A.gram[j] / A.gram[i]);
  return out;
}
MatQ sharp(const Algebra& A, const MatQ& T) {
  MatQ out(A.n, A.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) out(i, j) = T(j, i) * (A.gram[j] / A.gram[i]);
  return out;
}

CoElement co_bracket(const CoElement& x, const CoElement& y) {
  check_same(x.A, y.A);
  const Algebra& A = *x.A;
  CElement xu = A.celem(x.u), xv = A.celem(x.v), yu = A.celem(y.u), yv = A.celem(y.v);
  CoElement z = co_zero(A);
  z.u = x.T.apply(y.u);
  auto tu = y.T.apply(x.u);
  for (int i = 0; i < A.n; ++i) z.u[i] -= tu[i];
  MatG comm = x.T * y.T - y.T * x.T;
  MatG boxes = (A.box(xu, yv) - A.box(yu, xv)) * GRat(2);
  z.T = comm + boxes;
  auto t1v = sharp(A, x.T).apply(y.v);
  auto t2v = sharp(A, y.T).apply(x.v);
  for (int i = 0; i < A.n; ++i) z.v[i] = t2v[i] - t1v[i];
  return z;
}

std::pair<CElement, MatG> split_str(const Algebra& A, const MatG& T) {
  std::vector<GRat> e(A.n);
  for (int i = 0; i < A.n; ++i) e[i] = GRat(A.unit.c[i]);
  CElement a = A.celem(T.apply(e));
  MatG D = T - A.lmat(a);
  return {a, D};
}

CoElement cartan_theta(const CoElement& x) {
  const Algebra& A = *x.A;
  auto [a, D] = split_str(A, x.T);
  CoElement z = co_zero(A);
  for (int i = 0; i < A.n; ++i) {
    z.u[i] = -x.v[i];
    z.v[i] = -x.u[i];
  }
  z.T = D - A.lmat(a);
  return z;
}

CoElement cayley(const CoElement& x) {
  const Algebra& A = *x.A;
  GRat i_ = GRat::i_unit();
  GRat quarter(rat(1, 4));
  auto [a, D] = split_str(A, x.T);
  CoElement z = co_zero(A);
  for (int k = 0; k < A.n; ++k) {
    z.u[k] = (x.u[k] + x.v[k]) * quarter + i_ * a.c[k] * quarter;
    z.v[k] = x.u[k] + x.v[k] - i_ * a.c[k];
  }
  CElement u = A.celem(x.u), v = A.celem(x.v);
  z.T = D + (A.lmat(u) - A.lmat(v)) * i_;
  return z;
}

std::vector<CoElement> co_basis(const Algebra& A) {
  std::vector<CoElement> out;
  for (int i = 0; i < A.n; ++i) {
    std::vector<GRat> c = zero_vec(A.n);
    c[i] = GRat(1);
    out.push_back(co_n(A, A.celem(c)));
  }
  for (int i = 0; i < A.n; ++i) {
    std::vector<GRat> c = zero_vec(A.n);
    c[i] = GRat(1);
    out.push_back(co_l(A, A.lmat(A.celem(c))));
  }
  for (auto& D : A.derivation_basis()) out.push_back(co_l(A, to_g(D)));
  for (int i = 0; i < A.n; ++i) {
    std::vector<GRat> c = zero_vec(A.n);
    c[i] = GRat(1);
    out.push_back(co_nbar(A, A.celem(c)));
  }
  return out;
}

std::vector<CoElement> co_generating_set(const Algebra& A) {
  std::vector<CoElement> out;
  for (int i = 0; i < A.n; ++i) {
    std::vector<GRat> c(A.n, GRat(0));
    c[i] = GRat(1);
    CElement ei = A.celem(c);
    CoElement x = co_zero(A);
    x.u = c;
    x.v = c;
    out.push_back(x);
    out.push_back(co_l(A, A.lmat(ei)));
  }
  return out;
}

CoElement co_E(const Algebra& A) { return co_n(A, A.to_c(A.unit)); }
CoElement co_F(const Algebra& A) { return co_nbar(A, A.to_c(A.unit)); }
CoElement co_H(const Algebra& A) {
  MatG two = MatG::identity(A.n) * GRat(2);
  return co_l(A, two);
}

}  // namespace jfock
