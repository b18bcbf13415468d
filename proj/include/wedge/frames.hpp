#pragma once

#include "wedge/geometry.hpp"

namespace wedge {

/// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  double a, b, c, d;

  Mat2 transposed() const { return {a, c, b, d}; }
  double determinant() const { return a * d - b * c; }

  friend Vec2 operator*(const Mat2& m, Vec2 v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }
  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
};

/// Momentum resolved in the particle-centred rotating frame at angle phi:
/// u_bar along e_r, w_bar along e_phi.
struct RotatingFrameMomentum {
  double u_bar;
  double w_bar;
  double phi;
};

/// Coordinates along the two walls. x_tilde is the distance along wall A
/// (zero on wall B), y_tilde the distance along wall B (zero on wall A).
struct WedgeCoords {
  double x_tilde;
  double y_tilde;
  double u_tilde;
  double w_tilde;
};

struct PhasePoint {
  Vec2 q;
  Vec2 p;
};

/// Counter-clockwise rotation by `angle` radians.
Mat2 rotation(double angle);

/// Change of basis from the lab frame to the wall-aligned frame, R_{pi/2 - theta}.
Mat2 wedge_basis(const WedgeAngle& theta);

WedgeCoords cartesian_to_wedge(Vec2 q, Vec2 p, const WedgeAngle& theta);
PhasePoint wedge_to_cartesian(const WedgeCoords& wc, const WedgeAngle& theta);

RotatingFrameMomentum cartesian_to_rotating(Vec2 p, double phi);
Vec2 rotating_to_cartesian(const RotatingFrameMomentum& rfm);

/// pi/2 - theta on wall A, pi - theta on wall B.
double frame_angle(Wall wall, const WedgeAngle& theta);

/// (u_tilde, w_tilde) from a rotating-frame momentum taken at the wall's frame angle.
/// Identity on wall A, (u, w) -> (-w, u) on wall B. Throws if rfm.phi does not
/// match frame_angle(wall, theta) to 1e-12.
Vec2 rotating_to_wedge(const RotatingFrameMomentum& rfm, Wall wall, const WedgeAngle& theta);

/// Gravity (0, -1) expressed in the rotating frame at phi.
Vec2 gravity_rotating(double phi);

/// Gravity (0, -1) expressed in the wall-aligned frame.
Vec2 gravity_wedge(const WedgeAngle& theta);

}  // namespace wedge
