#pragma once

#include <stdexcept>
#include <string>

namespace jfock {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define JFOCK_ERROR_TYPE(Name)                                  \
  struct Name : Error {                                         \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
  }

JFOCK_ERROR_TYPE(AlgebraMismatch);
JFOCK_ERROR_TYPE(SingularElement);
JFOCK_ERROR_TYPE(NegativeEigenvalue);
JFOCK_ERROR_TYPE(NotIdempotent);
JFOCK_ERROR_TYPE(DegreeCapExceeded);
JFOCK_ERROR_TYPE(NonUniqueInvariant);
JFOCK_ERROR_TYPE(NotInWallachSet);
JFOCK_ERROR_TYPE(NotInClosedCone);
JFOCK_ERROR_TYPE(NotStructureElement);
JFOCK_ERROR_TYPE(NotConverged);
JFOCK_ERROR_TYPE(PoleInCoefficient);
JFOCK_ERROR_TYPE(PoleAtLambda);
JFOCK_ERROR_TYPE(QuadratureNotConverged);
JFOCK_ERROR_TYPE(RankMismatch);
JFOCK_ERROR_TYPE(RuleNotCalibrated);
JFOCK_ERROR_TYPE(UnsupportedGroup);
JFOCK_ERROR_TYPE(ExpansionFailed);
JFOCK_ERROR_TYPE(NotSphericalExpansion);

#undef JFOCK_ERROR_TYPE

}  // namespace jfock
