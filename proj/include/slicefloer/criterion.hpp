#pragma once

#include <optional>

#include "slicefloer/laurent.hpp"

namespace slicefloer {

// Verdict of the alternating-knot test: does t^(sigma/2) Delta(t) avoid the
// family (1 + t^(2m+1)) / (1 + t) = 1 - t + t^2 - ... + t^(2m)?
struct CriterionVerdict {
  bool passes = false;
  std::optional<int> matched_m;
  LaurentPoly normalized;  // the symmetric Delta that was tested
};

// The convention for which of t, 1/t appears in the exponent is not pinned
// down; the test is run under both substitutions and fails if either one
// matches, so a "passes" verdict is sound under both conventions.
CriterionVerdict rolling_criterion(const LaurentPoly& delta, int sigma);

}  // namespace slicefloer
