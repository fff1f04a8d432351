#pragma once

#include "slicefloer/grid.hpp"
#include "slicefloer/laurent.hpp"
#include "slicefloer/pd.hpp"

namespace slicefloer {

// Alexander polynomial from the Wirtinger presentation: a size-(n-1) minor
// of the labeled Alexander matrix, evaluated by fraction-free elimination,
// then normalized so Delta(t) = Delta(1/t) and Delta(1) = 1. The 0-crossing
// unknot gives the constant 1.
LaurentPoly alexander_from_pd(const PDCode& pd);

// Alexander polynomial from the grid state sum: sum over all n! grid states
// of (-1)^M t^A equals a unit times Delta_K(t) (1 - t^-1)^(n-1); the factor
// is divided out exactly (a remainder is an internal error) and the result
// normalized as above.
//
// max_size caps the grid size accepted (the sum visits n! states).
LaurentPoly alexander_from_grid(const GridDiagram& g, int max_size = 10);

// Fraction-free (Bareiss) determinant over the Laurent ring, up to sign.
LaurentPoly laurent_matrix_determinant(std::vector<std::vector<LaurentPoly>> m);

}  // namespace slicefloer
