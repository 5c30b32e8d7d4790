#pragma once

#include <mutex>

#include "jfock/diffop.hpp"
#include "jfock/polyengine.hpp"

namespace jfock {

// Vanishing ideal of the closed orbit X_k-bar, with a degree-by-degree
// normal-form reduction. Generators: rank-(k+1) minors for the matrix
// algebras, (det) for spin factors, the coordinate ideal for k = 0.
class OrbitIdeal {
 public:
  OrbitIdeal(const Algebra& A, int k);

  int orbit() const { return k_; }
  const std::vector<PolyG>& generators() const { return gens_; }

  PolyG reduce(const PolyG& p) const;
  PolyQ reduce_real(const PolyQ& p) const;
  bool contains(const PolyG& p) const { return reduce(p).is_zero_poly(); }
  bool contains(const PolyQ& p) const { return contains(complexify(p)); }
  // true if every normal-form coefficient of the operator lies in the ideal
  bool annihilates(const DiffOpG& op) const;

 private:
  const SpanBasis<GRat>& slice(int degree) const;

  const Algebra* A_;
  int k_;
  std::vector<PolyG> gens_;
  mutable std::mutex mtx_;
  mutable std::map<int, SpanBasis<GRat>> slices_;
};

const OrbitIdeal& orbit_ideal(const Algebra& A, int k);

struct TangentialityReport {
  int orbit = 0;
  int degree_cap = 0;
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// B_{kd/2} maps the ideal (generators times monomials up to the cap) into
// the ideal; exact reduction, failures listed.
TangentialityReport tangentiality_check(const Algebra& A, int k, int degree_cap);

}  // namespace jfock
