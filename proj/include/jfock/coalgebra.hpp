#pragma once

#include "jfock/algebra.hpp"

namespace jfock {

// Element X = (u, T, v) of the conformal Lie algebra co(V)_C acting by the
// vector field X(z) = u + Tz - P(z)v.
struct CoElement {
  const Algebra* A = nullptr;
  std::vector<GRat> u;
  MatG T = MatG(0, 0);
  std::vector<GRat> v;
};

CoElement co_element(const Algebra& A, const CElement& u, const MatG& T, const CElement& v);
CoElement co_zero(const Algebra& A);
CoElement co_n(const Algebra& A, const CElement& u);      // (u, 0, 0)
CoElement co_l(const Algebra& A, const MatG& T);          // (0, T, 0)
CoElement co_nbar(const Algebra& A, const CElement& v);   // (0, 0, v)

CoElement co_add(const CoElement& x, const CoElement& y);
CoElement co_scale(const CoElement& x, const GRat& s);
bool co_equal(const CoElement& x, const CoElement& y);

// Lie bracket (T1 u2 - T2 u1, [T1,T2] + 2(u1 box v2) - 2(u2 box v1),
//              -T1^# v2 + T2^# v1).
CoElement co_bracket(const CoElement& x, const CoElement& y);

// Cartan involution theta(u, D + L(a), v) = (-v, D - L(a), -u).
CoElement cartan_theta(const CoElement& x);

// Cayley type transform, linear extension of
//   C(a,0,0)       = (a/4,  i L(a), a)
//   C(0,L(a)+D,0)  = (i a/4, D,    -i a)
//   C(0,0,a)       = (a/4, -i L(a), a).
CoElement cayley(const CoElement& x);

// adjoint T^# with respect to the C-bilinear trace form
MatG sharp(const Algebra& A, const MatG& T);
MatQ sharp(const Algebra& A, const MatQ& T);

// split T = L(a) + D with a = T e, D a derivation
std::pair<CElement, MatG> split_str(const Algebra& A, const MatG& T);

// Basis of the real form g = co(V): (e_a,0,0), (0,L(e_a),0), (0,D_b,0), (0,0,e_a).
std::vector<CoElement> co_basis(const Algebra& A);
// The generating real form {(a, L(b), a)}: basis (e_a, 0, e_a), (0, L(e_a), 0).
std::vector<CoElement> co_generating_set(const Algebra& A);

// sl_2 triple E = (e,0,0), H = (0, 2 id, 0), F = (0,0,e)
CoElement co_E(const Algebra& A);
CoElement co_H(const Algebra& A);
CoElement co_F(const Algebra& A);

}  // namespace jfock
