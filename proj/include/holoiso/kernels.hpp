#pragma once

// Data-parallel kernels. Each has a serial reference path and an OpenMP
// path that must agree bit for bit: every sample is computed independently
// and reductions run in input order after the parallel loop.

#include <span>
#include <vector>

#include "holoiso/germ.hpp"

namespace holoiso {

enum class Exec { Serial, Parallel };

/// Residuals of iso over the grid.
ResidueReport verify_grid(const DiskIsometry& iso, std::span<const Complex> grid, Exec exec,
                          double radius_cap = 1.0);

/// f1 at every grid point (radial continuation).
std::vector<Complex> evaluate_disk_grid(const DiskIsometry& iso, std::span<const Complex> grid, Exec exec,
                                        double radius_cap = 1.0);

/// Applies fn to every index in [0, count) and stores the results in order.
/// The first exception thrown by any task is rethrown after the loop.
template <class T, class Fn>
std::vector<T> map_indices(int count, Exec exec, Fn&& fn);

}  // namespace holoiso

#include "holoiso/kernels_impl.hpp"
