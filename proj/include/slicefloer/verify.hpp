#pragma once

#include <string>
#include <vector>

#include "slicefloer/catalog.hpp"

namespace slicefloer {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample, or empty
};

struct VerifyOptions {
  int max_grid = 9;  // grids larger than this are skipped by the suite
  int workers = 0;
};

// Catalog-wide property suite: serialization round-trips, mirror laws,
// Alexander symmetry and the two-route agreement, signature parity and
// mirror antisymmetry, grading symmetry, Euler characteristic, genus
// detection, thin-model against grid-engine dims, criterion against box
// count, d^2 = 0 samples, and the small Kunneth identities.
std::vector<PropertyResult> run_property_suite(const std::vector<KnotRecord>& catalog,
                                               const VerifyOptions& opts = {});

}  // namespace slicefloer
