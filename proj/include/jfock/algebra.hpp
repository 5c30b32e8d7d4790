#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "jfock/poly.hpp"

namespace jfock {

enum class Kind { Real, Spin, SymReal, HermComplex };

std::string kind_name(Kind k, int param);

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Element of V in the fixed rational basis.
struct Element {
  const Algebra* A = nullptr;
  std::vector<Rat> c;
};

// Element of V_C (coordinatewise conjugation, the basis is real).
struct CElement {
  const Algebra* A = nullptr;
  std::vector<GRat> c;
};

// Numeric spectral data: x = rot * (sum_i eig[i] c_i), eig sorted decreasing.
struct Spectral {
  Eigen::MatrixXd rot;
  std::vector<double> eig;
};

struct PolyCaches;  // per-algebra memo cache, defined in polyengine.cpp

// A concrete simple Euclidean Jordan algebra with exact structure tensor.
// Basis is rational with a diagonal Gram matrix for the trace form; all
// formulas that need duality go through `gram`.
struct Algebra {
  Kind kind;
  int param;  // k in Spin(k)/Sym(k)/Herm(k); 1 for Real
  int n, r, d;
  std::vector<std::string> labels;
  std::vector<Rat> gram;                                    // diagonal of the Gram matrix
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> mul_table;  // [i][j] -> sparse product
  std::vector<Rat> trace_vec;   // tr(x) = trace_vec . coords
  std::vector<Element> frame;   // c_1 .. c_r
  Element unit;
  std::vector<PolyQ> minors;    // Delta_1 .. Delta_r (Delta_r = det)

  mutable std::shared_ptr<PolyCaches> caches;

  static AlgebraPtr make(Kind kind, int param);
  // Parse "real", "spin:4", "sym:2", "herm:3".
  static AlgebraPtr parse(const std::string& spec);

  std::string name() const { return kind_name(kind, param); }

  // -- element constructors ------------------------------------------------
  Element elem(std::vector<Rat> coords) const;
  CElement celem(std::vector<GRat> coords) const;
  Element zero() const { return elem(std::vector<Rat>(n, Rat(0))); }
  CElement to_c(const Element& x) const;
  Element frame_diag(const std::vector<Rat>& a) const;  // sum a_i c_i

  // -- core operations -----------------------------------------------------
  Element mul(const Element& x, const Element& y) const;
  CElement mul(const CElement& x, const CElement& y) const;
  MatQ lmat(const Element& x) const;   // L(x)
  MatG lmat(const CElement& x) const;
  MatQ pmat(const Element& x) const;   // P(x) = 2L(x)^2 - L(x^2)
  MatG pmat(const CElement& x) const;
  MatQ pmat2(const Element& x, const Element& y) const;  // P(x,y)
  MatG pmat2(const CElement& x, const CElement& y) const;
  MatQ box(const Element& x, const Element& y) const;    // x `box` y
  MatG box(const CElement& x, const CElement& y) const;

  Rat trace(const Element& x) const;
  GRat trace(const CElement& x) const;
  Rat inner(const Element& x, const Element& y) const;   // trace form, bilinear
  GRat inner(const CElement& x, const CElement& y) const;
  Rat det(const Element& x) const;
  GRat det(const CElement& x) const;
  GRat principal_minor(int j, const CElement& z) const;  // Delta_j, 1-based

  Element inverse(const Element& x) const;   // P(x)^{-1} x
  Element power_int(const Element& x, int m) const;
  Element power(const Element& x, double s) const;  // numeric, via spectral
  Spectral spectral(const Element& x) const;
  Spectral spectral_vec(const Eigen::VectorXd& x) const;
  // Peirce projections of an idempotent c onto eigenvalues 1, 1/2, 0.
  std::array<MatQ, 3> peirce(const Element& c) const;

  Element ek(int k) const;  // c_1 + ... + c_k (k = 0 gives 0)

  // structure/derivation data (exact)
  std::vector<MatQ> derivation_basis() const;   // basis of der(V)
  std::vector<MatQ> structure_basis() const;    // der(V) + L(e_alpha)

  // -- numeric helpers -----------------------------------------------------
  Eigen::VectorXd to_numeric(const Element& x) const;
  Eigen::VectorXcd to_numeric(const CElement& x) const;
  Eigen::MatrixXd gram_numeric() const;
  Eigen::VectorXd mul_numeric(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  Eigen::VectorXcd mul_numeric(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const;
  Eigen::MatrixXcd pmat_numeric(const Eigen::VectorXcd& x) const;
  double trace_numeric(const Eigen::VectorXd& x) const;
  std::complex<double> inner_numeric(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const;

  std::string catalog_json() const;

 private:
  void validate() const;  // constructor-enforced axioms
  friend AlgebraPtr make_algebra_impl(Kind, int);
};

inline void check_same(const Algebra* a, const Algebra* b) {
  if (a != b) throw AlgebraMismatch();
}

}  // namespace jfock
