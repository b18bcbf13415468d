#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "wedge/frames.hpp"
#include "wedge/geometry.hpp"

namespace wedge {

/// Flight times at or below this are re-detections of the wall just left.
inline constexpr double kTimeEpsilon = 1e-10;
/// Landing points closer than this to the vertex terminate the run.
inline constexpr double kVertexEpsilon = 1e-9;
/// Normal landing speeds below this are treated as sliding.
inline constexpr double kGrazingSpeed = 1e-10;
/// Distance from a wall line accepted by reflect().
inline constexpr double kOnWallTolerance = 1e-10;

/// Lab-frame state in dimensionless units (m = g = 1).
struct CartesianState {
  double x{0.0};
  double y{0.0};
  double u{0.0};
  double w{0.0};
  double t{0.0};

  Vec2 position() const { return {x, y}; }
  Vec2 momentum() const { return {u, w}; }

  friend bool operator==(const CartesianState&, const CartesianState&) = default;
};

struct CollisionEvent {
  Wall wall;
  double t;
  CartesianState pre;
  CartesianState post;
  /// Post-collision momentum at phi = frame_angle(wall).
  RotatingFrameMomentum rotating_post;
};

enum class Termination { Completed, VertexHit, Degenerate, NoCollision };

std::string_view to_string(Termination t);

/// The two separable integrals H_x and H_y of the wall-aligned frame.
struct WedgeIntegrals {
  double hx;
  double hy;
};

struct Trajectory {
  CartesianState initial;
  WedgeAngle theta;
  std::vector<CollisionEvent> events;
  double energy;
  WedgeIntegrals integrals;
  Termination termination{Termination::Completed};
};

enum class CollisionStatus { Ok, VertexHit, NoCollision, Degenerate };

struct CollisionPrediction {
  CollisionStatus status;
  double dt;
  Wall wall;
};

class ReflectError : public std::domain_error {
 public:
  enum class Kind { NotOnWall, OutgoingAlready };
  ReflectError(Kind kind, const char* what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

double hamiltonian(const CartesianState& s);

WedgeIntegrals wedge_hamiltonians(const CartesianState& s, const WedgeAngle& theta);

/// Exact parabolic flight under unit downward gravity.
CartesianState free_flight(const CartesianState& s, double dt);

/// Time until the next wall contact, found by solving each wall's
/// signed-distance quadratic in closed form.
CollisionPrediction next_collision(const CartesianState& s, const WedgeAngle& theta);

/// Specular reflection p' = p - 2 (p.n) n about the wall's inward normal.
CartesianState reflect(const CartesianState& s, Wall wall, const WedgeAngle& theta);

/// The reflection formula without preconditions.
Vec2 reflect_momentum(Vec2 p, Vec2 unit_normal);

/// Particle placed on a wall at arclength s with wall-relative momentum:
/// u_bar along the wall away from the vertex, w_bar along the inward normal.
CartesianState launch_from_wall(Wall wall, double s, double u_bar, double w_bar, const WedgeAngle& theta);

/// Event-driven simulation of n collisions.
Trajectory simulate(const CartesianState& initial, const WedgeAngle& theta, std::size_t n);

/// Oracle: the same motion as two independent one-dimensional bouncers along
/// the walls, x_tilde reflecting at wall B and y_tilde at wall A.
Trajectory decoupled_simulate(const CartesianState& initial, const WedgeAngle& theta, std::size_t n);

}  // namespace wedge
