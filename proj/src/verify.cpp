#include "slicefloer/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "slicefloer/alexander.hpp"
#include "slicefloer/criterion.hpp"
#include "slicefloer/diagram_build.hpp"
#include "slicefloer/errors.hpp"
#include "slicefloer/grid_homology.hpp"
#include "slicefloer/signature.hpp"
#include "slicefloer/slice_disk.hpp"
#include "slicefloer/thin_model.hpp"

namespace slicefloer {

namespace {

struct Suite {
  const std::vector<KnotRecord>& catalog;
  VerifyOptions opts;
  std::vector<PropertyResult> results;
  std::map<std::string, BigradedDims> hat_cache;

  const BigradedDims& hat(const KnotRecord& rec) {
    auto it = hat_cache.find(rec.name);
    if (it != hat_cache.end()) return it->second;
    HomologyOptions h{.max_size = opts.max_grid, .workers = opts.workers, .verbose = false};
    return hat_cache.emplace(rec.name, hat_dims(*rec.grid, h)).first->second;
  }

  bool has_small_grid(const KnotRecord& rec) const {
    return rec.grid && rec.grid->size() <= opts.max_grid;
  }

  void property(const std::string& name, const std::function<std::string()>& body) {
    PropertyResult r;
    r.name = name;
    try {
      r.detail = body();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

}  // namespace

std::vector<PropertyResult> run_property_suite(const std::vector<KnotRecord>& catalog,
                                               const VerifyOptions& opts) {
  Suite s{catalog, opts, {}, {}};

  s.property("grid serialization round-trip", [&]() -> std::string {
    for (const auto& rec : catalog)
      if (rec.grid && !(GridDiagram::parse(rec.grid->serialize()) == *rec.grid))
        return rec.name;
    return "";
  });

  s.property("mirror is an involution", [&]() -> std::string {
    for (const auto& rec : catalog)
      if (rec.grid && !(rec.grid->mirror().mirror() == *rec.grid)) return rec.name;
    return "";
  });

  s.property("Alexander polynomial symmetric with Delta(1) = 1", [&]() -> std::string {
    for (const auto& rec : catalog) {
      if (!rec.pd) continue;
      LaurentPoly d = alexander_from_pd(*rec.pd);
      if (!d.is_palindromic() || d.evaluate(1) != 1) return rec.name;
    }
    return "";
  });

  s.property("Alexander polynomial: grid route equals PD route", [&]() -> std::string {
    for (const auto& rec : catalog) {
      if (!rec.pd || !s.has_small_grid(rec) || rec.crossing_number == 0) continue;
      if (!(alexander_from_grid(*rec.grid, s.opts.max_grid) == alexander_from_pd(*rec.pd)))
        return rec.name;
    }
    return "";
  });

  s.property("signature even and odd under mirroring", [&]() -> std::string {
    for (const auto& rec : catalog) {
      if (!rec.pd) continue;
      int sig = signature_goeritz(*rec.pd);
      if (sig % 2 != 0) return rec.name + " (odd)";
      if (signature_goeritz(rec.pd->mirrored()) != -sig) return rec.name + " (mirror)";
    }
    return "";
  });

  s.property("criterion verdict is mirror invariant", [&]() -> std::string {
    for (const auto& rec : catalog) {
      LaurentPoly d = knot_alexander(rec);
      if (rolling_criterion(d, rec.signature).passes !=
          rolling_criterion(d, -rec.signature).passes)
        return rec.name;
    }
    return "";
  });

  s.property("hat dims symmetric under (M,A) -> (M-2A,-A)", [&]() -> std::string {
    for (const auto& rec : catalog)
      if (s.has_small_grid(rec) && !s.hat(rec).is_symmetric()) return rec.name;
    return "";
  });

  s.property("Euler characteristic of hat dims equals Delta", [&]() -> std::string {
    for (const auto& rec : catalog) {
      if (!s.has_small_grid(rec)) continue;
      if (!(normalize_alexander(s.hat(rec).euler_characteristic()) == knot_alexander(rec)))
        return rec.name;
    }
    return "";
  });

  s.property("genus detection: top Alexander grading equals catalog genus",
             [&]() -> std::string {
               for (const auto& rec : catalog) {
                 if (!s.has_small_grid(rec) || !rec.genus) continue;
                 if (s.hat(rec).max_alexander() != *rec.genus) return rec.name;
               }
               return "";
             });

  s.property("thin model per-Alexander dims equal grid-engine dims", [&]() -> std::string {
    for (const auto& rec : catalog) {
      if (!rec.alternating || !s.has_small_grid(rec)) continue;
      ThinModel model = build_thin_model(knot_alexander(rec), rec.signature);
      if (!(thin_bigraded_dims(model) == s.hat(rec))) return rec.name;
    }
    return "";
  });

  s.property("criterion verdict iff nonzero box count (alternating catalog)",
             [&]() -> std::string {
               for (const auto& rec : catalog) {
                 if (!rec.alternating) continue;
                 LaurentPoly d = knot_alexander(rec);
                 CriterionVerdict v = rolling_criterion(d, rec.signature);
                 ThinModel model = build_thin_model(d, rec.signature);
                 phi_psi(model, v);  // throws on disagreement
                 if (v.passes != (model.boxes > 0)) return rec.name;
               }
               return "";
             });

  s.property("classification verdict matches the criterion", [&]() -> std::string {
    for (const auto& rec : catalog) {
      if (!rec.alternating) continue;
      ClassificationReport report = classify_rollspins(rec);
      bool indist = report.verdict == RollspinVerdict::indistinguishable_by_invariant;
      if (indist == report.criterion.passes) return rec.name;
    }
    return "";
  });

  s.property("rollspin elements separate exactly the parameters (structured equality)",
             [&]() -> std::string {
               for (const auto& rec : catalog) {
                 if (!rec.alternating) continue;
                 SliceDiskElement e0 = rollspin_element(rec, 0);
                 SliceDiskElement e1 = rollspin_element(rec, 1);
                 SliceDiskElement e2 = rollspin_element(rec, 2);
                 bool zero = e1.nilpotent_rank == 0;
                 if (e0.represents_same_element(e1) != zero) return rec.name;
                 if (e1.represents_same_element(e2) != zero) return rec.name;
                 if (!e1.represents_same_element(e1)) return rec.name;
               }
               return "";
             });

  s.property("rank profiles stay within 1..dim bounds with full graded support",
             [&]() -> std::string {
               for (const auto& rec : catalog) {
                 if (!rec.alternating) continue;
                 SliceDiskDescriptor spin{DiskKind::spin, rec, std::nullopt, 0};
                 RankProfile p = rank_profile(element_for(spin));
                 BigradedDims dims = knot_hat_dims(rec);
                 if (p.total != dims.total()) return rec.name;
                 for (const auto& [key, d] : dims.entries())
                   if (p.by_bidegree.at(key) != d) return rec.name;
                 SliceDiskDescriptor bsum{DiskKind::boundary_sum, rec, std::nullopt, 0};
                 RankProfile q = rank_profile(element_for(bsum));
                 if (q.total != 1 || q.by_bidegree.at({0, 0}) != 1) return rec.name;
               }
               return "";
             });

  s.property("d^2 = 0 on sampled small complexes", [&]() -> std::string {
    for (const auto& rec : catalog) {
      if (!rec.grid || rec.grid->size() > 6) continue;
      check_boundary_squared(*rec.grid, 6);
    }
    return "";
  });

  s.property("deconvolution recomposes to the tilde dims", [&]() -> std::string {
    for (const auto& rec : catalog) {
      if (!rec.grid || rec.grid->size() > 7) continue;
      HomologyOptions h{.max_size = 7, .workers = s.opts.workers, .verbose = false};
      BigradedDims tilde = homology_dims(*rec.grid, h);
      BigradedDims hat = deconvolve(tilde, rec.grid->size());
      BigradedDims w;
      w.add(0, 0, 1);
      w.add(-1, -1, 1);
      BigradedDims recomposed = hat;
      for (int k = 1; k < rec.grid->size(); ++k) recomposed = recomposed.convolve(w);
      if (!(recomposed == tilde)) return rec.name;
    }
    return "";
  });

  s.property("connected sum with the unknot preserves hat dims", [&]() -> std::string {
    const KnotRecord* unknot = nullptr;
    const KnotRecord* trefoil = nullptr;
    for (const auto& rec : catalog) {
      if (rec.crossing_number == 0 && rec.grid) unknot = &rec;
      if (rec.name == "3_1" && rec.grid) trefoil = &rec;
    }
    if (!unknot || !trefoil) return "";  // nothing to check in this catalog
    GridDiagram sum = connected_sum(*unknot->grid, *trefoil->grid);
    HomologyOptions h{.max_size = sum.size(), .workers = s.opts.workers, .verbose = false};
    if (!(hat_dims(sum, h) == s.hat(*trefoil))) return "unknot # 3_1";
    return "";
  });

  s.property("mirror duality of hat dims", [&]() -> std::string {
    for (const auto& rec : catalog) {
      if (!s.has_small_grid(rec) || rec.grid->size() > 7) continue;
      HomologyOptions h{.max_size = 7, .workers = s.opts.workers, .verbose = false};
      if (!(hat_dims(rec.grid->mirror(), h) == s.hat(rec).mirror_dual())) return rec.name;
    }
    return "";
  });

  return s.results;
}

}  // namespace slicefloer
