#pragma once

#include "nbhd/complex.hpp"
#include "nbhd/integer_matrix.hpp"

namespace nbhd {

/// Simplicial boundary map from i-faces (columns) to (i-1)-faces (rows),
/// indexed by the sorted positions in `table`. Dropping the j-th vertex of a
/// face contributes (-1)^j. Columns are assembled in parallel.
IntegerMatrix boundary_matrix(const FaceTable& table, int i);

namespace serial {

IntegerMatrix boundary_matrix(const FaceTable& table, int i);

}  // namespace serial

}  // namespace nbhd
