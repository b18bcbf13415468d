#include "wedge/frames.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wedge {

Mat2 rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c, -s, s, c};
}

Mat2 wedge_basis(const WedgeAngle& theta) {
  // cos(pi/2 - theta) = sin(theta); built from the cached values so that
  // the columns are exactly the wall tangents.
  return {theta.sin(), -theta.cos(), theta.cos(), theta.sin()};
}

WedgeCoords cartesian_to_wedge(Vec2 q, Vec2 p, const WedgeAngle& theta) {
  const Mat2 to_wedge = wedge_basis(theta).transposed();
  const Vec2 qw = to_wedge * q;
  const Vec2 pw = to_wedge * p;
  return {qw.x, qw.y, pw.x, pw.y};
}

PhasePoint wedge_to_cartesian(const WedgeCoords& wc, const WedgeAngle& theta) {
  const Mat2 basis = wedge_basis(theta);
  return {basis * Vec2{wc.x_tilde, wc.y_tilde}, basis * Vec2{wc.u_tilde, wc.w_tilde}};
}

RotatingFrameMomentum cartesian_to_rotating(Vec2 p, double phi) {
  const Vec2 r = rotation(phi).transposed() * p;
  return {r.x, r.y, phi};
}

Vec2 rotating_to_cartesian(const RotatingFrameMomentum& rfm) {
  return rotation(rfm.phi) * Vec2{rfm.u_bar, rfm.w_bar};
}

double frame_angle(Wall wall, const WedgeAngle& theta) {
  return wall == Wall::A ? std::numbers::pi / 2 - theta.radians() : std::numbers::pi - theta.radians();
}

Vec2 rotating_to_wedge(const RotatingFrameMomentum& rfm, Wall wall, const WedgeAngle& theta) {
  if (std::abs(rfm.phi - frame_angle(wall, theta)) > 1e-12) {
    throw std::invalid_argument("rotating frame angle does not match the wall's frame angle");
  }
  if (wall == Wall::A) {
    return {rfm.u_bar, rfm.w_bar};
  }
  return {-rfm.w_bar, rfm.u_bar};
}

Vec2 gravity_rotating(double phi) { return {-std::sin(phi), -std::cos(phi)}; }

Vec2 gravity_wedge(const WedgeAngle& theta) { return {-theta.cos(), -theta.sin()}; }

}  // namespace wedge
