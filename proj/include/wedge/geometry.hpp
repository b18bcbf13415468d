#pragma once

#include <cmath>
#include <stdexcept>
#include <string_view>

namespace wedge {

/// Plain 2-D vector used for positions and momenta in the lab frame.
struct Vec2 {
  double x{0.0};
  double y{0.0};

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Tolerance on the signed distance used by region membership.
inline constexpr double kBoundaryTolerance = 1e-12;

/// The two walls. A is the right-hand slope, B the left-hand slope.
enum class Wall { A, B };

constexpr Wall other(Wall w) { return w == Wall::A ? Wall::B : Wall::A; }
constexpr std::string_view to_string(Wall w) { return w == Wall::A ? "A" : "B"; }

/// Rotation of the orthogonal wedge, measured clockwise from the vertical.
/// Validated once here; everything downstream assumes 0 < theta < pi/2.
class WedgeAngle {
 public:
  explicit WedgeAngle(double radians);

  static WedgeAngle from_degrees(double degrees);

  double radians() const { return theta_; }
  double degrees() const;
  double sin() const { return sin_; }
  double cos() const { return cos_; }
  double tan() const { return sin_ / cos_; }
  double cot() const { return cos_ / sin_; }

  friend bool operator==(const WedgeAngle& a, const WedgeAngle& b) { return a.theta_ == b.theta_; }

 private:
  double theta_;
  double sin_;
  double cos_;
};

/// Extent of the motion along each wall for a given energy.
struct ConfigBounds {
  double x_tilde_max;
  double y_tilde_max;
};

/// Unit tangent (pointing away from the vertex) and the frame's second axis.
struct WallFrame {
  Vec2 tangent;
  Vec2 normal;
};

/// True iff the point lies on or above both walls (within kBoundaryTolerance).
bool contains(Vec2 point, const WedgeAngle& theta);

/// Signed distance of a point from a wall's line, positive inside the region.
double signed_distance(Vec2 point, Wall wall, const WedgeAngle& theta);

/// Point at arclength s >= 0 from the vertex along the wall.
Vec2 wall_point(Wall wall, double s, const WedgeAngle& theta);

/// Tangent and normal of the wall's rotating frame, i.e. (e_r, e_phi) at
/// phi = frame_angle(wall). On wall B the second axis points out of the region.
WallFrame wall_frame(Wall wall, const WedgeAngle& theta);

/// Unit normal of the wall pointing into the region of allowed motion.
Vec2 inward_normal(Wall wall, const WedgeAngle& theta);

ConfigBounds config_bounds(double energy, const WedgeAngle& theta);

}  // namespace wedge
