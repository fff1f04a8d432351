#include "slicefloer/criterion.hpp"

#include "slicefloer/errors.hpp"

namespace slicefloer {

namespace {

LaurentPoly alternating_pattern(int m) {
  std::vector<std::int64_t> coeffs(2 * m + 1);
  for (int k = 0; k <= 2 * m; ++k) coeffs[k] = k % 2 == 0 ? 1 : -1;
  return LaurentPoly(0, std::move(coeffs));
}

}  // namespace

CriterionVerdict rolling_criterion(const LaurentPoly& delta, int sigma) {
  if (sigma % 2 != 0)
    throw UserError("criterion: signature must be even, got " + std::to_string(sigma));
  if (!delta.is_palindromic() || delta.evaluate(1) != 1)
    throw UserError("criterion: Delta must be symmetric with Delta(1) = 1");

  CriterionVerdict verdict;
  verdict.normalized = delta;
  LaurentPoly shifted = delta.shifted(sigma / 2);
  int m_bound = delta.span() / 2 + 1;
  for (const LaurentPoly& candidate : {shifted, shifted.reciprocal()}) {
    for (int m = 0; m <= m_bound; ++m) {
      if (candidate == alternating_pattern(m)) {
        verdict.passes = false;
        verdict.matched_m = m;
        return verdict;
      }
    }
  }
  verdict.passes = true;
  return verdict;
}

}  // namespace slicefloer
