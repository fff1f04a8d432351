#pragma once

#include <vector>

#include "slicefloer/grid.hpp"
#include "slicefloer/pd.hpp"

namespace slicefloer {

// Planar diagram read off a grid: vertical segments run from X to O and
// cross over horizontal segments, which run from O to X. The PD therefore
// presents the same (oriented, chiral) knot as the grid.
PDCode pd_from_grid(const GridDiagram& g);

// Planar diagram of the closure of a braid word on `strands` strands.
// Letters are +-i for the i-th elementary generator; the closure must be a
// knot (one component), otherwise UserError is thrown.
PDCode pd_from_braid(int strands, const std::vector<int>& word);

}  // namespace slicefloer
