#pragma once

// Double description for polyhedral cones {x : A x >= 0} over the integers.

#include "alcoved/exact.hpp"

#include <vector>

namespace alcoved::dd {

struct ConeGenerators {
  std::vector<IntVector> rays;       // primitive, one per extreme ray
  std::vector<IntVector> lineality;  // primitive basis of the lineality space
};

/// Generators of {x in R^dim : row . x >= 0 for every row}. Rows are
/// processed in the given order. Arithmetic is exact; std::overflow_error is
/// thrown if an intermediate leaves 64 bits after reduction.
ConeGenerators generators(const std::vector<IntVector>& rows, std::size_t dim);

}  // namespace alcoved::dd
