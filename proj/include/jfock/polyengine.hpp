#pragma once

#include <map>
#include <optional>
#include <shared_mutex>

#include "jfock/algebra.hpp"
#include "jfock/partition.hpp"

namespace jfock {

// Span of the K-type P_m together with its Fischer Gram matrix.
struct KTypeBasis {
  Partition m;
  std::vector<PolyQ> basis;  // d_m independent polynomials, homogeneous of degree |m|
  MatQ gram;                 // exact Fischer Gram matrix
  int dim() const { return int(basis.size()); }
};

// Default cap on |m| for the exact K-type machinery; callers may raise it.
constexpr int kDefaultDegreeCap = 6;

// ---- generalized power functions and K-types --------------------------------

PolyQ delta_m(const Algebra& A, const Partition& m);
const KTypeBasis& ktype_basis(const Algebra& A, const Partition& m,
                              int degree_cap = kDefaultDegreeCap);
Rat ktype_dim(const Algebra& A, const Partition& m, int degree_cap = kDefaultDegreeCap);
const PolyQ& spherical_phi(const Algebra& A, const Partition& m,
                           int degree_cap = kDefaultDegreeCap);

// ---- Fischer inner product ---------------------------------------------------

Rat fischer(const Algebra& A, const PolyQ& p, const PolyQ& q);
GRat fischer(const Algebra& A, const PolyG& p, const PolyG& q);

// ---- two-variable spherical polynomials --------------------------------------

// Point of a complexified orbit in polar form z = u * a; `u` is a structure
// matrix on coordinates (an element of U), `a` the frame-diagonal part.
struct FactoredPoint {
  Eigen::MatrixXcd u;          // numeric unitary structure matrix
  std::vector<double> a;       // r eigen-coordinates, sorted non-increasing
  int orbit_rank() const {
    int k = 0;
    for (double v : a)
      if (v > 0) ++k;
    return k;
  }
};

// Exact counterpart used by the symbolic tests: u rational, sqrt(a) rational.
struct FactoredPointExact {
  MatG u = MatG(0, 0);          // rational structure matrix (often identity)
  std::vector<Rat> sqrt_a;      // square roots of the eigen-coordinates
};

// Phi_m(z, w) = Phi_m(P(a^(1/2)) u^{-1} z) for w = u a.
std::complex<double> spherical_phi2(const Algebra& A, const Partition& m,
                                    const Eigen::VectorXcd& z, const FactoredPoint& w,
                                    int degree_cap = kDefaultDegreeCap);
GRat spherical_phi2_exact(const Algebra& A, const Partition& m, const CElement& z,
                          const FactoredPointExact& w, int degree_cap = kDefaultDegreeCap);
// Phi_m(z, w) as an exact polynomial in z for fixed exact w.
PolyG phi2_poly_in_z(const Algebra& A, const Partition& m, const FactoredPointExact& w,
                     int degree_cap = kDefaultDegreeCap);
// The linear map z -> P(a^(1/2)) u^{-1} z of a factored point.
MatG factored_matrix(const Algebra& A, const FactoredPointExact& w);
Eigen::MatrixXcd factored_matrix(const Algebra& A, const FactoredPoint& w);

// ---- Pochhammer, binomials, Laguerre -----------------------------------------

Rat pochhammer(const Algebra& A, const Rat& lambda, const Partition& m);
double pochhammer_d(const Algebra& A, double lambda, const Partition& m);

// Coefficients of Phi_m(e + x) in the basis {Phi_n : |n| <= |m|}.
std::map<Partition, Rat> binomials(const Algebra& A, const Partition& m,
                                   int degree_cap = kDefaultDegreeCap);

struct WallachPoint {
  Rat lambda;
  int orbit;  // k with O_lambda = O_k
  bool disc;  // true iff lambda lies in the discrete part
  bool discrete() const { return disc; }
};
// Validates membership and finds the orbit index.
WallachPoint wallach(const Algebra& A, const Rat& lambda);
std::vector<Rat> wallach_discrete(const Algebra& A);

PolyQ laguerre_poly(const Algebra& A, const Partition& m, const Rat& lambda,
                    int degree_cap = kDefaultDegreeCap);
double laguerre_func_value(const Algebra& A, const Partition& m, const Rat& lambda,
                           const Eigen::VectorXd& x, int degree_cap = kDefaultDegreeCap);
Rat laguerre_poly_value(const Algebra& A, const Partition& m, const Rat& lambda,
                        const Element& x, int degree_cap = kDefaultDegreeCap);

// Projection of a polynomial onto its P_m-components (Hua--Kostant--Schmid),
// returned as partition -> component. Exact; needs |m| <= degree cap.
std::map<Partition, PolyQ> hks_components(const Algebra& A, const PolyQ& p, int degree_cap);

// Expand an invariant polynomial in the spherical basis {Phi_n}.
std::map<Partition, Rat> invariant_in_phi_basis(const Algebra& A, const PolyQ& p,
                                                int degree_cap);

// Admissible partitions for orbit index k (m_{k+1} = 0), weight <= max_weight.
std::vector<Partition> admissible_partitions(const Algebra& A, int k, int max_weight);

}  // namespace jfock
