#include "wedge/geometry.hpp"

#include <numbers>
#include <string>

namespace wedge {

WedgeAngle::WedgeAngle(double radians) : theta_(radians), sin_(std::sin(radians)), cos_(std::cos(radians)) {
  if (!(radians > 0.0 && radians < std::numbers::pi / 2)) {
    throw std::invalid_argument("wedge angle must lie in (0, pi/2), got " + std::to_string(radians));
  }
}

WedgeAngle WedgeAngle::from_degrees(double degrees) { return WedgeAngle(degrees * std::numbers::pi / 180.0); }

double WedgeAngle::degrees() const { return theta_ * 180.0 / std::numbers::pi; }

double signed_distance(Vec2 point, Wall wall, const WedgeAngle& theta) {
  return dot(point, inward_normal(wall, theta));
}

bool contains(Vec2 point, const WedgeAngle& theta) {
  // The orthogonal wedge is the intersection of the two inner half-planes.
  return signed_distance(point, Wall::A, theta) >= -kBoundaryTolerance &&
         signed_distance(point, Wall::B, theta) >= -kBoundaryTolerance;
}

Vec2 wall_point(Wall wall, double s, const WedgeAngle& theta) {
  if (!(s >= 0.0)) {
    throw std::invalid_argument("wall arclength must be non-negative");
  }
  return s * wall_frame(wall, theta).tangent;
}

WallFrame wall_frame(Wall wall, const WedgeAngle& theta) {
  const double s = theta.sin();
  const double c = theta.cos();
  if (wall == Wall::A) {
    return {{s, c}, {-c, s}};
  }
  return {{-c, s}, {-s, -c}};
}

Vec2 inward_normal(Wall wall, const WedgeAngle& theta) {
  // Each wall's inward normal is the other wall's tangent.
  if (wall == Wall::A) {
    return {-theta.cos(), theta.sin()};
  }
  return {theta.sin(), theta.cos()};
}

ConfigBounds config_bounds(double energy, const WedgeAngle& theta) {
  if (!(energy > 0.0)) {
    throw std::invalid_argument("energy must be positive");
  }
  return {energy / theta.cos(), energy / theta.sin()};
}

}  // namespace wedge
