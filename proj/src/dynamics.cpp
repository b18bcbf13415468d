#include "wedge/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

namespace wedge {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::Completed:
      return "completed";
    case Termination::VertexHit:
      return "vertex_hit";
    case Termination::Degenerate:
      return "degenerate";
    case Termination::NoCollision:
      return "no_collision";
  }
  return "unknown";
}

double hamiltonian(const CartesianState& s) { return 0.5 * (s.u * s.u + s.w * s.w) + s.y; }

WedgeIntegrals wedge_hamiltonians(const CartesianState& s, const WedgeAngle& theta) {
  const WedgeCoords wc = cartesian_to_wedge(s.position(), s.momentum(), theta);
  return {0.5 * wc.u_tilde * wc.u_tilde + wc.x_tilde * theta.cos(),
          0.5 * wc.w_tilde * wc.w_tilde + wc.y_tilde * theta.sin()};
}

CartesianState free_flight(const CartesianState& s, double dt) {
  if (!(dt >= 0.0)) {
    throw std::invalid_argument("flight time must be non-negative");
  }
  return {s.x + s.u * dt, s.y + s.w * dt - 0.5 * dt * dt, s.u, s.w - dt, s.t + dt};
}

namespace {

/// One wall's signed distance d(t) = d0 + v t - g t^2 / 2 along its inward normal.
struct WallApproach {
  double d0;
  double v;
  double g;

  double discriminant() const { return std::max(0.0, v * v + 2.0 * g * d0); }

  /// The later root of d(t) = 0, where the particle descends through the wall.
  double landing_time() const {
    const double root = std::sqrt(discriminant());
    return v >= 0.0 ? (v + root) / g : 2.0 * d0 / (root - v);
  }

  double impact_speed() const { return std::sqrt(discriminant()); }
};

WallApproach approach(const CartesianState& s, Wall wall, const WedgeAngle& theta) {
  const Vec2 n = inward_normal(wall, theta);
  return {dot(s.position(), n), dot(s.momentum(), n), n.y};
}

double position_scale(Vec2 q) { return std::max(1.0, norm(q)); }

void check_initial(const CartesianState& s, const WedgeAngle& theta) {
  if (!contains(s.position(), theta)) {
    throw std::invalid_argument("initial position lies outside the wedge");
  }
  if (!(hamiltonian(s) > 0.0)) {
    throw std::invalid_argument("initial energy must be positive");
  }
  for (const Wall wall : {Wall::A, Wall::B}) {
    const WallApproach a = approach(s, wall, theta);
    if (std::abs(a.d0) <= kOnWallTolerance * position_scale(s.position()) && a.v < -kGrazingSpeed) {
      throw std::invalid_argument("initial state sits on a wall moving out of the region");
    }
  }
}

std::optional<Termination> as_termination(CollisionStatus status) {
  switch (status) {
    case CollisionStatus::Ok:
      return std::nullopt;
    case CollisionStatus::VertexHit:
      return Termination::VertexHit;
    case CollisionStatus::Degenerate:
      return Termination::Degenerate;
    case CollisionStatus::NoCollision:
      return Termination::NoCollision;
  }
  return Termination::NoCollision;
}

}  // namespace

CollisionPrediction next_collision(const CartesianState& s, const WedgeAngle& theta) {
  const double scale = position_scale(s.position());
  std::array<std::optional<double>, 2> landing;
  std::array<double, 2> impact{};
  for (const Wall wall : {Wall::A, Wall::B}) {
    const auto k = static_cast<std::size_t>(wall);
    const WallApproach a = approach(s, wall, theta);
    impact[k] = a.impact_speed();
    if (std::abs(a.d0) <= kOnWallTolerance * scale && impact[k] < kGrazingSpeed) {
      return {CollisionStatus::Degenerate, 0.0, wall};
    }
    const double dt = a.landing_time();
    if (dt > kTimeEpsilon) {
      landing[k] = dt;
    }
  }
  if (!landing[0] && !landing[1]) {
    return {CollisionStatus::NoCollision, 0.0, Wall::A};
  }
  Wall wall = Wall::A;
  if (!landing[0] || (landing[1] && *landing[1] < *landing[0])) {
    wall = Wall::B;
  }
  const auto k = static_cast<std::size_t>(wall);
  const double dt = *landing[k];
  if (landing[0] && landing[1] && std::abs(*landing[0] - *landing[1]) <= 1e-12) {
    return {CollisionStatus::VertexHit, dt, wall};
  }
  if (norm(free_flight(s, dt).position()) < kVertexEpsilon) {
    return {CollisionStatus::VertexHit, dt, wall};
  }
  if (impact[k] < kGrazingSpeed) {
    return {CollisionStatus::Degenerate, dt, wall};
  }
  return {CollisionStatus::Ok, dt, wall};
}

Vec2 reflect_momentum(Vec2 p, Vec2 unit_normal) { return p - (2.0 * dot(p, unit_normal)) * unit_normal; }

CartesianState reflect(const CartesianState& s, Wall wall, const WedgeAngle& theta) {
  const Vec2 n = inward_normal(wall, theta);
  if (std::abs(dot(s.position(), n)) > kOnWallTolerance * position_scale(s.position())) {
    throw ReflectError(ReflectError::Kind::NotOnWall, "state is not on the named wall");
  }
  if (dot(s.momentum(), n) > 0.0) {
    throw ReflectError(ReflectError::Kind::OutgoingAlready, "momentum already points into the region");
  }
  const Vec2 p = reflect_momentum(s.momentum(), n);
  return {s.x, s.y, p.x, p.y, s.t};
}

CartesianState launch_from_wall(Wall wall, double s, double u_bar, double w_bar, const WedgeAngle& theta) {
  if (!(w_bar >= 0.0)) {
    throw std::invalid_argument("launch normal momentum must point into the region");
  }
  const Vec2 q = wall_point(wall, s, theta);
  const Vec2 p = u_bar * wall_frame(wall, theta).tangent + w_bar * inward_normal(wall, theta);
  return {q.x, q.y, p.x, p.y, 0.0};
}

Trajectory simulate(const CartesianState& initial, const WedgeAngle& theta, std::size_t n) {
  check_initial(initial, theta);
  Trajectory traj{initial, theta, {}, hamiltonian(initial), wedge_hamiltonians(initial, theta)};
  traj.events.reserve(n);
  CartesianState state = initial;
  for (std::size_t i = 0; i < n; ++i) {
    const CollisionPrediction next = next_collision(state, theta);
    if (const auto stop = as_termination(next.status)) {
      traj.termination = *stop;
      break;
    }
    const CartesianState pre = free_flight(state, next.dt);
    const CartesianState post = reflect(pre, next.wall, theta);
    traj.events.push_back(
        {next.wall, post.t, pre, post, cartesian_to_rotating(post.momentum(), frame_angle(next.wall, theta))});
    state = post;
  }
  return traj;
}

namespace {

/// x_tilde(t) = x0 + u t - g t^2 / 2 with reflection at x_tilde = 0.
struct Bouncer {
  double pos;
  double mom;
  double g;
  double integral;  // mom^2 / 2 + g pos

  double impact_speed() const { return std::sqrt(2.0 * integral); }

  double time_to_floor() const {
    const double speed = impact_speed();
    return mom >= 0.0 ? (mom + speed) / g : 2.0 * pos / (speed - mom);
  }

  void advance(double dt) {
    pos += mom * dt - 0.5 * g * dt * dt;
    mom -= g * dt;
  }
};

}  // namespace

Trajectory decoupled_simulate(const CartesianState& initial, const WedgeAngle& theta, std::size_t n) {
  check_initial(initial, theta);
  Trajectory traj{initial, theta, {}, hamiltonian(initial), wedge_hamiltonians(initial, theta)};
  traj.events.reserve(n);

  const WedgeCoords wc = cartesian_to_wedge(initial.position(), initial.momentum(), theta);
  // The x_tilde bouncer hits floor on wall B, the y_tilde bouncer on wall A.
  Bouncer along_a{wc.x_tilde, wc.u_tilde, theta.cos(), traj.integrals.hx};
  Bouncer along_b{wc.y_tilde, wc.w_tilde, theta.sin(), traj.integrals.hy};
  double t = initial.t;

  auto to_state = [&](double time) {
    const PhasePoint pp =
        wedge_to_cartesian({along_a.pos, along_b.pos, along_a.mom, along_b.mom}, theta);
    return CartesianState{pp.q.x, pp.q.y, pp.p.x, pp.p.y, time};
  };

  for (std::size_t i = 0; i < n; ++i) {
    const double scale = std::max(1.0, std::hypot(along_a.pos, along_b.pos));
    if ((std::abs(along_a.pos) <= kOnWallTolerance * scale && along_a.impact_speed() < kGrazingSpeed) ||
        (std::abs(along_b.pos) <= kOnWallTolerance * scale && along_b.impact_speed() < kGrazingSpeed)) {
      traj.termination = Termination::Degenerate;
      break;
    }
    const double ta = along_a.time_to_floor();
    const double tb = along_b.time_to_floor();
    const bool a_valid = ta > kTimeEpsilon;
    const bool b_valid = tb > kTimeEpsilon;
    if (!a_valid && !b_valid) {
      traj.termination = Termination::NoCollision;
      break;
    }
    // x_tilde reaching zero is a hit on wall B.
    const bool hits_b = a_valid && (!b_valid || ta <= tb);
    const double dt = hits_b ? ta : tb;
    if (a_valid && b_valid && std::abs(ta - tb) <= 1e-12) {
      traj.termination = Termination::VertexHit;
      break;
    }
    along_a.advance(dt);
    along_b.advance(dt);
    t += dt;
    Bouncer& floor = hits_b ? along_a : along_b;
    const Bouncer& free = hits_b ? along_b : along_a;
    if (std::abs(free.pos) < kVertexEpsilon) {
      traj.termination = Termination::VertexHit;
      break;
    }
    if (floor.impact_speed() < kGrazingSpeed) {
      traj.termination = Termination::Degenerate;
      break;
    }
    floor.pos = 0.0;
    floor.mom = -floor.impact_speed();
    const CartesianState pre = to_state(t);
    floor.mom = floor.impact_speed();
    const CartesianState post = to_state(t);
    const Wall wall = hits_b ? Wall::B : Wall::A;
    traj.events.push_back({wall, t, pre, post, cartesian_to_rotating(post.momentum(), frame_angle(wall, theta))});
  }
  return traj;
}

}  // namespace wedge
