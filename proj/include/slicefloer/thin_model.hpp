#pragma once

#include <map>
#include <optional>

#include "slicefloer/criterion.hpp"
#include "slicefloer/grid_homology.hpp"
#include "slicefloer/laurent.hpp"

namespace slicefloer {

// Structured model of the knot Floer complex of an alternating knot: one
// staircase of length 2|tau|+1 plus `boxes` box summands, all supported on
// the diagonal M = A + delta_shift.
struct ThinModel {
  int tau = 0;                                  // -sigma/2
  std::map<int, long long> per_alexander_dims;  // A -> |a_A|
  long long boxes = 0;
  int delta_shift = 0;  // sigma/2; frozen against the grid engine's support
};

// From the normalized Alexander polynomial and the signature. Inputs that
// are not consistent with a thin complex (non-integral box count or
// non-alternating coefficient signs) are rejected with UserError.
ThinModel build_thin_model(const LaurentPoly& delta, int sigma);

// The bigraded dimensions the model predicts (everything on the diagonal).
BigradedDims thin_bigraded_dims(const ThinModel& model);

// The composite basepoint-moving endomorphism on the model: rank one per
// box, zero on the staircase.
struct PhiPsiData {
  long long rank = 0;
  bool nonzero = false;
  // Present only when the box placement is forced by the dimensions; each
  // box contributes rank one at its central bidegree.
  std::optional<std::map<BigradedDims::Key, long long>> graded_rank;
};

// The verdict must agree with the model's box count (the content of the
// alternating-knot criterion); disagreement throws InternalError.
PhiPsiData phi_psi(const ThinModel& model, const CriterionVerdict& criterion);

// Box centers when the placement is forced: remaining dims after removing
// the staircase deconvolved against the (1,2,1) box profile. Empty optional
// when no consistent placement exists.
std::optional<std::map<int, long long>> box_placement(const ThinModel& model);

// Explicit matrix of the composite on the model, as (from, to) generator
// index pairs: each box maps one of its two central generators to the other.
// Empty optional when the placement is ambiguous. The matrix squares to zero
// by construction; tests assert it.
struct PhiPsiMatrix {
  long long dim = 0;
  std::vector<std::pair<long long, long long>> entries;
};
std::optional<PhiPsiMatrix> phi_psi_matrix(const ThinModel& model);

}  // namespace slicefloer
