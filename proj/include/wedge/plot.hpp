#pragma once

#include <span>
#include <string>

#include "wedge/dynamics.hpp"
#include "wedge/orbits.hpp"

namespace wedge {

/// Configuration-space plot: both walls plus one polyline (class "arc") per
/// flight between collisions. The view box covers the reachable rectangle
/// along the walls with a 5% margin.
std::string render_trajectory_svg(const Trajectory& traj);

/// Scatter of (theta in degrees, u_bar) for periodic launch points.
std::string render_sweep_svg(std::span<const PeriodicPoint> points);

}  // namespace wedge
