#pragma once

#include <vector>

#include "holoiso/poly.hpp"

namespace holoiso {

/// count points filling the disk |w| <= radius evenly (sunflower spiral,
/// area-uniform). The first point is near the origin.
std::vector<Complex> disk_grid(int count, double radius);

/// count equally spaced points on |w| = radius starting at angle offset.
std::vector<Complex> circle_grid(int count, double radius, double offset = 0.0);

}  // namespace holoiso
