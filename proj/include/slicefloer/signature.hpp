#pragma once

#include <cstdint>
#include <vector>

#include "slicefloer/pd.hpp"

namespace slicefloer {

// Exact signature of a symmetric integer matrix: characteristic polynomial
// by Faddeev-LeVerrier over 128-bit integers, root sign counts by Descartes'
// rule (exact for real-rooted polynomials).
int symmetric_matrix_signature(const std::vector<std::vector<std::int64_t>>& m);

// Knot signature via the Gordon-Litherland formula: signature of the Goeritz
// matrix of a checkerboard surface minus the correction term mu. Both
// checkerboard colorings are evaluated and must agree. Diagrams with at most
// one crossing are unknots and return 0.
int signature_goeritz(const PDCode& pd);

}  // namespace slicefloer
