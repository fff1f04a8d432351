#include "slicefloer/thin_model.hpp"

#include <cstdlib>

#include "slicefloer/errors.hpp"

namespace slicefloer {

ThinModel build_thin_model(const LaurentPoly& delta, int sigma) {
  if (sigma % 2 != 0)
    throw UserError("thin model: signature must be even, got " + std::to_string(sigma));
  if (!delta.is_palindromic() || delta.evaluate(1) != 1)
    throw UserError("thin model: Delta must be symmetric with Delta(1) = 1");

  ThinModel model;
  model.tau = -sigma / 2;
  model.delta_shift = sigma / 2;

  long long total = 0;
  int last_sign = 0;
  for (int a = delta.min_degree(); a <= delta.max_degree(); ++a) {
    std::int64_t c = delta.coeff(a);
    if (c == 0)
      throw UserError("thin model: Delta has an interior zero coefficient; "
                      "input is not thin-consistent");
    int s = c > 0 ? 1 : -1;
    if (last_sign != 0 && s == last_sign)
      throw UserError("thin model: Delta coefficients do not alternate in sign; "
                      "input is not thin-consistent");
    last_sign = s;
    model.per_alexander_dims[a] = std::llabs(c);
    total += std::llabs(c);
  }

  long long staircase = 2 * std::llabs(model.tau) + 1;
  if (total < staircase || (total - staircase) % 4 != 0)
    throw UserError("thin model: dimension count " + std::to_string(total) +
                    " does not split as staircase " + std::to_string(staircase) +
                    " + 4*boxes; input is not thin-consistent");
  model.boxes = (total - staircase) / 4;
  return model;
}

BigradedDims thin_bigraded_dims(const ThinModel& model) {
  BigradedDims dims;
  for (const auto& [a, d] : model.per_alexander_dims) dims.add(a + model.delta_shift, a, d);
  return dims;
}

std::optional<std::map<int, long long>> box_placement(const ThinModel& model) {
  // Remaining dims after the staircase, deconvolved against (1,2,1). The
  // kernel is invertible, so a consistent placement is unique when it exists.
  std::map<int, long long> rem = model.per_alexander_dims;
  long long t = std::llabs(model.tau);
  for (int a = static_cast<int>(-t); a <= static_cast<int>(t); ++a) {
    if (--rem[a] < 0) return std::nullopt;
  }
  std::map<int, long long> centers;
  long long placed = 0;
  while (true) {
    int top = 0;
    bool found = false;
    for (auto it = rem.rbegin(); it != rem.rend(); ++it)
      if (it->second != 0) {
        top = it->first;
        found = true;
        break;
      }
    if (!found) break;
    long long mult = rem[top];
    if (mult < 0) return std::nullopt;
    int center = top - 1;
    centers[center] += mult;
    placed += mult;
    rem[top] -= mult;
    rem[center] -= 2 * mult;
    rem[center - 1] -= mult;
    if (rem[center] < 0 || rem[center - 1] < 0) return std::nullopt;
  }
  if (placed != model.boxes) return std::nullopt;
  return centers;
}

std::optional<PhiPsiMatrix> phi_psi_matrix(const ThinModel& model) {
  auto centers = box_placement(model);
  if (!centers) return std::nullopt;
  PhiPsiMatrix m;
  long long t = std::llabs(model.tau);
  std::map<int, long long> next_index;
  for (const auto& [a, d] : model.per_alexander_dims) {
    next_index[a] = m.dim;
    m.dim += d;
  }
  // Stable generator layout per Alexander grading: the staircase generator
  // first, then box generators in center order.
  std::map<int, long long> used;
  for (int a = static_cast<int>(-t); a <= static_cast<int>(t); ++a) used[a] += 1;
  for (const auto& [center, mult] : *centers) {
    for (long long b = 0; b < mult; ++b) {
      used[center + 1] += 1;
      long long mid1 = next_index[center] + used[center];
      long long mid2 = mid1 + 1;
      used[center] += 2;
      used[center - 1] += 1;
      m.entries.push_back({mid1, mid2});
    }
  }
  return m;
}

PhiPsiData phi_psi(const ThinModel& model, const CriterionVerdict& criterion) {
  PhiPsiData data;
  data.rank = model.boxes;
  data.nonzero = model.boxes > 0;
  if (data.nonzero != criterion.passes)
    throw InternalError("phi-psi: box count " + std::to_string(model.boxes) +
                        " disagrees with the criterion verdict; the two routes must "
                        "agree on alternating knots");
  auto centers = box_placement(model);
  if (centers) {
    std::map<BigradedDims::Key, long long> graded;
    for (const auto& [a, mult] : *centers)
      if (mult > 0) graded[{a + model.delta_shift, a}] = mult;
    data.graded_rank = std::move(graded);
  }
  return data;
}

}  // namespace slicefloer
