#include "slicefloer/slice_disk.hpp"

#include "slicefloer/errors.hpp"

namespace slicefloer {

std::string to_string(DiskKind kind) {
  switch (kind) {
    case DiskKind::spin: return "spin";
    case DiskKind::rollspin: return "rollspin";
    case DiskKind::boundary_sum: return "boundary_sum";
    case DiskKind::invertible_concordance: return "invertible_concordance";
  }
  return "?";
}

std::string to_string(ElementForm form) {
  switch (form) {
    case ElementForm::identity: return "identity";
    case ElementForm::unipotent: return "unipotent";
    case ElementForm::rank_one: return "rank_one";
    case ElementForm::full_rank_injective: return "full_rank_injective";
  }
  return "?";
}

std::string to_string(RollspinVerdict verdict) {
  switch (verdict) {
    case RollspinVerdict::all_l_distinct_over_Z_conditional:
      return "all_l_distinct_over_Z_conditional";
    case RollspinVerdict::parity_only_over_F2: return "parity_only_over_F2";
    case RollspinVerdict::indistinguishable_by_invariant:
      return "indistinguishable_by_invariant";
  }
  return "?";
}

bool SliceDiskElement::represents_same_element(const SliceDiskElement& o) const {
  if (form != o.form) return false;
  if (form == ElementForm::unipotent) return l == o.l;
  return true;
}

BigradedDims knot_hat_dims(const KnotRecord& record, const HomologyOptions& opts) {
  if (record.alternating)
    return thin_bigraded_dims(build_thin_model(knot_alexander(record), record.signature));
  if (record.grid) return hat_dims(*record.grid, opts);
  throw UserError("knot " + record.name +
                  " is not alternating and has no grid; its dims are not computable here");
}

namespace {

struct ThinData {
  ThinModel model;
  CriterionVerdict criterion;
  PhiPsiData phi_psi_data;
};

ThinData thin_data_for(const KnotRecord& knot) {
  if (!knot.alternating)
    throw UserError("knot " + knot.name + " is not alternating; the basepoint-moving "
                    "composite is only computable through the thin model here");
  ThinData d;
  LaurentPoly delta = knot_alexander(knot);
  d.criterion = rolling_criterion(delta, knot.signature);
  d.model = build_thin_model(delta, knot.signature);
  d.phi_psi_data = phi_psi(d.model, d.criterion);
  return d;
}

// Primality from the table naming convention c_k: prime iff c >= 3. Names
// outside that convention carry no primality information.
bool known_prime(const KnotRecord& r) {
  if (!r.is_prime_table_knot() && !(r.name == "0_1" || r.crossing_number == 0))
    throw UserError("knot " + r.name + ": missing catalog primality data needed for "
                    "the sphere-independence claim");
  return r.is_prime_table_knot();
}

bool sphere_independence(const KnotRecord& k, const KnotRecord& k2) {
  if (!known_prime(k) || !known_prime(k2)) return false;
  // K' != -K: distinct table knots differ as knot types; for equal names the
  // signature rules out the mirror-reverse unless it vanishes.
  if (k.name != k2.name) return true;
  return k.signature != 0;
}

}  // namespace

SliceDiskElement rollspin_element(const KnotRecord& knot, int l) {
  ThinData d = thin_data_for(knot);
  SliceDiskElement e;
  e.descriptor = {DiskKind::rollspin, knot, std::nullopt, l};
  e.l = l;
  e.nilpotent_rank = d.phi_psi_data.rank;
  e.form = (l == 0 || d.phi_psi_data.rank == 0) ? ElementForm::identity
                                                : ElementForm::unipotent;
  e.source_dims = thin_bigraded_dims(d.model);
  e.target_dims = e.source_dims;
  return e;
}

SliceDiskElement element_for(const SliceDiskDescriptor& desc, const HomologyOptions& opts) {
  if (desc.kind == DiskKind::rollspin) return rollspin_element(desc.knot, desc.rollspin_l);
  SliceDiskElement e;
  e.descriptor = desc;
  e.source_dims = knot_hat_dims(desc.knot, opts);
  e.target_dims = desc.knot2 ? knot_hat_dims(*desc.knot2, opts) : e.source_dims;
  switch (desc.kind) {
    case DiskKind::spin:
      if (desc.knot2 && !(e.target_dims == e.source_dims))
        throw UserError("spin construction takes a single knot");
      e.form = ElementForm::identity;
      break;
    case DiskKind::boundary_sum:
      e.form = ElementForm::rank_one;
      break;
    case DiskKind::invertible_concordance:
      if (e.source_dims.total() > e.target_dims.total())
        throw UserError("invertible concordance requires dim V <= dim V'");
      e.form = ElementForm::full_rank_injective;
      break;
    case DiskKind::rollspin:
      break;  // handled above
  }
  return e;
}

ClassificationReport classify_rollspins(const KnotRecord& knot) {
  ThinData d = thin_data_for(knot);
  ClassificationReport report;
  report.knot = knot.name;
  report.criterion = d.criterion;
  report.torsion_caveat = false;  // alternating knots have free homology
  if (d.phi_psi_data.nonzero) {
    report.verdict = RollspinVerdict::all_l_distinct_over_Z_conditional;
    report.parity_unconditional = true;
  } else {
    report.verdict = RollspinVerdict::indistinguishable_by_invariant;
    report.parity_unconditional = false;
  }
  return report;
}

RankProfile rank_profile(const SliceDiskElement& element) {
  RankProfile profile;
  switch (element.form) {
    case ElementForm::identity:
    case ElementForm::unipotent:
    case ElementForm::full_rank_injective:
      // Grading-preserving and injective (unipotent maps are invertible since
      // the composite squares to zero), so every graded rank is the full
      // graded dimension of V.
      for (const auto& [key, dim] : element.source_dims.entries())
        profile.by_bidegree[key] = dim;
      break;
    case ElementForm::rank_one:
      profile.by_bidegree[{0, 0}] = 1;
      break;
  }
  for (const auto& [key, rank] : profile.by_bidegree) {
    profile.total += rank;
    profile.by_alexander[key.second] += rank;
  }
  const KnotRecord& k = element.descriptor.knot;
  const KnotRecord& k2 = element.descriptor.knot2 ? *element.descriptor.knot2 : k;
  profile.sphere_independent = sphere_independence(k, k2);

  long long bound = std::min(element.source_dims.total(), element.target_dims.total());
  if (profile.total < 1 || profile.total > bound)
    throw InternalError("rank profile out of range: total " + std::to_string(profile.total) +
                        " vs bound " + std::to_string(bound));
  return profile;
}

SectionBoundReport section_bound_check(const RankProfile& profile,
                                       const BigradedDims& section_hfk,
                                       std::optional<int> section_genus) {
  SectionBoundReport r;
  r.profile_total = profile.total;
  r.section_total = section_hfk.total();
  r.dimension_ok = r.profile_total <= r.section_total;

  r.bidegree_ok = true;
  for (const auto& [key, rank] : profile.by_bidegree)
    if (rank > section_hfk.at(key.first, key.second)) r.bidegree_ok = false;

  r.profile_max_alexander = 0;
  for (const auto& [a, rank] : profile.by_alexander)
    if (rank > 0) r.profile_max_alexander = std::max(r.profile_max_alexander, a);
  r.section_genus = section_genus ? *section_genus : section_hfk.max_alexander();
  r.genus_ok = r.profile_max_alexander <= r.section_genus;

  r.satisfied = r.dimension_ok && r.bidegree_ok && r.genus_ok;
  return r;
}

KunnethReport kunneth_identification_check(const KnotRecord& k1, const KnotRecord& k2,
                                           const HomologyOptions& opts) {
  if (!k1.grid || !k2.grid)
    throw UserError("kunneth check needs grid codes for both knots");
  int total = k1.grid->size() + k2.grid->size();
  if (total > opts.max_size)
    throw UserError("connected sum grid size " + std::to_string(total) +
                    " exceeds the cap " + std::to_string(opts.max_size));
  GridDiagram sum = connected_sum(k1.grid->mirror(), *k2.grid);
  KunnethReport report;
  HomologyOptions sum_opts = opts;
  sum_opts.max_size = std::max(opts.max_size, total);
  report.engine_dims = hat_dims(sum, sum_opts);
  report.convolved_dims =
      hat_dims(*k1.grid, opts).mirror_dual().convolve(hat_dims(*k2.grid, opts));
  report.ok = report.engine_dims == report.convolved_dims;
  return report;
}

}  // namespace slicefloer
