#pragma once

#include "jfock/coalgebra.hpp"
#include "jfock/diffop.hpp"
#include "jfock/polyengine.hpp"

namespace jfock {

// ---- gradient and Bessel operators (components in the fixed basis) ----------

// gradient: (d/dx)_g = (1/G_gg) d_g
std::vector<DiffOpQ> gradient(const Algebra& A);

// Bessel operator B_lambda = P(d/dx) x + lambda d/dx, n components.
std::vector<DiffOpQ> bessel_op(const Algebra& A, const Rat& lambda);
std::vector<DiffOpG> bessel_op_c(const Algebra& A, const GRat& lambda);

// pairing (v | B) = sum_g v_g G_gg B_g
DiffOpQ pair_with(const Algebra& A, const std::vector<Rat>& v, const std::vector<DiffOpQ>& op);
DiffOpG pair_with(const Algebra& A, const std::vector<GRat>& v, const std::vector<DiffOpG>& op);

// P(u, v) x for vectors of polynomials u, v (used by the product rule test)
std::vector<PolyQ> pmat2_poly(const Algebra& A, const std::vector<PolyQ>& u,
                              const std::vector<PolyQ>& v);

// ---- radial forms on K^L-invariant functions ---------------------------------

enum class RadialKind { V, W };

// (B^V_lambda)^i resp. (B^W_lambda)^i applied exactly to a symmetric
// polynomial F(a_1..a_r); divided differences stay polynomial.
PolyQ bessel_radial_apply(const Algebra& A, RadialKind which, const Rat& lambda, int i,
                          const PolyQ& F);
// numeric application to a smooth F via central differences
double bessel_radial_apply_numeric(const Algebra& A, RadialKind which, double lambda, int i,
                                   const std::function<double(const std::vector<double>&)>& F,
                                   const std::vector<double>& a, double h);

// ---- model actions ------------------------------------------------------------

// dpi_lambda(u,T,v) = i(u|x) + d_{T^# x} + (r lambda / 2n) Tr(T^#) + i(v|B_lambda)
DiffOpG dpi(const Algebra& A, const Rat& lambda, const CoElement& X);
// holomorphic complexification (same formula, complex coefficients)
DiffOpG dpiC(const Algebra& A, const Rat& lambda, const CoElement& X);
// drho_lambda(X) = dpiC_lambda(C(X))
DiffOpG drho(const Algebra& A, const Rat& lambda, const CoElement& X);

// structure-group membership test: P(gx) = g P(x) g^# on the basis
bool is_structure_element(const Algebra& A, const MatQ& g);

// ell(g) B ell(g^{-1}) p = g^# B p, checked exactly on one polynomial
bool equivariance_check(const Algebra& A, const MatQ& g, const Rat& lambda, const PolyQ& p);

}  // namespace jfock
