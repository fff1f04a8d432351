#pragma once

#include <optional>
#include <string>

#include "slicefloer/catalog.hpp"
#include "slicefloer/criterion.hpp"
#include "slicefloer/grid_homology.hpp"
#include "slicefloer/thin_model.hpp"

namespace slicefloer {

// Slice disks of -K # K' this tool can reason about: deform-spun disks of
// -K # K (spin with the identity, roll-spin with l twists), boundary
// connected sums, and disks arising from invertible concordances.
enum class DiskKind { spin, rollspin, boundary_sum, invertible_concordance };
std::string to_string(DiskKind kind);

struct SliceDiskDescriptor {
  DiskKind kind = DiskKind::spin;
  KnotRecord knot;
  std::optional<KnotRecord> knot2;  // concordance kinds; defaults to knot
  int rollspin_l = 0;
};

// The structured form of the invariant viewed in Hom(V, V'): the theorems
// determine it only up to the connected-sum identification, and the form
// captures exactly the basis-free content (rank, unipotency parameter,
// grading support).
enum class ElementForm { identity, unipotent, rank_one, full_rank_injective };
std::string to_string(ElementForm form);

struct SliceDiskElement {
  SliceDiskDescriptor descriptor;
  ElementForm form = ElementForm::identity;
  int l = 0;                     // roll-spin parameter as given
  long long nilpotent_rank = 0;  // rank of the composite endomorphism
  BigradedDims source_dims;      // V
  BigradedDims target_dims;      // V'

  // Structured equality of the represented elements: unipotent families with
  // nonzero composite differ exactly when their parameters do.
  bool represents_same_element(const SliceDiskElement& o) const;
};

// HFK-hat dimensions of a catalog knot: the thin model for alternating
// records, the grid engine otherwise.
BigradedDims knot_hat_dims(const KnotRecord& record, const HomologyOptions& opts = {});

SliceDiskElement rollspin_element(const KnotRecord& knot, int l);
SliceDiskElement element_for(const SliceDiskDescriptor& desc, const HomologyOptions& opts = {});

enum class RollspinVerdict {
  all_l_distinct_over_Z_conditional,
  parity_only_over_F2,
  indistinguishable_by_invariant,
};
std::string to_string(RollspinVerdict verdict);

struct ClassificationReport {
  std::string knot;
  CriterionVerdict criterion;
  RollspinVerdict verdict = RollspinVerdict::indistinguishable_by_invariant;
  // The GF(2) conclusion (even vs odd l distinguished); claimable exactly
  // when the composite is nonzero, independent of any integral lift.
  bool parity_unconditional = false;
  bool torsion_caveat = false;
};

ClassificationReport classify_rollspins(const KnotRecord& knot);

struct RankProfile {
  long long total = 0;
  std::map<int, long long> by_alexander;               // i -> rank
  std::map<BigradedDims::Key, long long> by_bidegree;  // (j, i) -> rank
  bool sphere_independent = false;
};

RankProfile rank_profile(const SliceDiskElement& element);

struct SectionBoundReport {
  bool dimension_ok = false;  // total <= dim HFK(L)
  bool bidegree_ok = false;   // per-grading refinement
  bool genus_ok = false;      // max supported Alexander grading <= g(L)
  bool satisfied = false;
  long long profile_total = 0;
  long long section_total = 0;
  int profile_max_alexander = 0;
  int section_genus = 0;
};

// A violated report certifies that no hyperplane section of the disk along
// the sphere can produce the candidate link.
SectionBoundReport section_bound_check(const RankProfile& profile,
                                       const BigradedDims& section_hfk,
                                       std::optional<int> section_genus = std::nullopt);

struct KunnethReport {
  BigradedDims engine_dims;     // hat dims of -K # K' from the grid engine
  BigradedDims convolved_dims;  // mirror-dual dims of K convolved with dims of K'
  bool ok = false;
};

KunnethReport kunneth_identification_check(const KnotRecord& k1, const KnotRecord& k2,
                                           const HomologyOptions& opts = {});

}  // namespace slicefloer
