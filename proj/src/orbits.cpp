#include "wedge/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wedge {

void validate(const OrbitSpec& spec) {
  if (spec.p < 1 || spec.q < 1) {
    throw std::invalid_argument("p and q must be positive");
  }
  if (std::gcd(spec.p, spec.q) != 1) {
    throw std::invalid_argument("p and q must be coprime");
  }
  if (!(spec.energy > 0.0)) {
    throw std::invalid_argument("energy must be positive");
  }
}

std::string describe(const OrbitClass& c) {
  switch (c.kind) {
    case OrbitKind::Periodic:
      return "periodic period=" + std::to_string(c.period) + " hits_A=" + std::to_string(c.hits_a) +
             " hits_B=" + std::to_string(c.hits_b);
    case OrbitKind::Dense:
      return "dense (no recurrence within horizon)";
    case OrbitKind::Sliding:
      return "sliding";
    case OrbitKind::Degenerate:
      return "degenerate reason=" + std::string(to_string(c.reason));
  }
  return "unknown";
}

WedgeAngle critical_angle(const OrbitSpec& spec) {
  validate(spec);
  return WedgeAngle(std::atan2(static_cast<double>(spec.p), static_cast<double>(spec.q)));
}

double period_ratio(const WedgeAngle& theta) { return std::tan(theta.radians()); }

MapState periodic_initial_condition(const OrbitSpec& spec) {
  validate(spec);
  const double root_e = std::sqrt(spec.energy);
  return {root_e * static_cast<double>(spec.q - spec.p) / static_cast<double>(spec.q + spec.p), root_e,
          spec.energy};
}

double launch_arclength(Wall wall, double u_bar, double w_bar, double energy, const WedgeAngle& theta) {
  const double height_per_length = wall_frame(wall, theta).tangent.y;
  const double s = (energy - 0.5 * (u_bar * u_bar + w_bar * w_bar)) / height_per_length;
  if (!(s >= 0.0)) {
    throw std::invalid_argument("launch momentum exceeds the energy");
  }
  return s;
}

CartesianState periodic_launch(const OrbitSpec& spec) {
  const WedgeAngle theta = critical_angle(spec);
  const MapState ic = periodic_initial_condition(spec);
  return launch_from_wall(Wall::A, launch_arclength(Wall::A, ic.u_bar, ic.w_bar, spec.energy, theta), ic.u_bar, ic.w_bar,
                          theta);
}

Trajectory build_periodic_orbit(const OrbitSpec& spec, std::size_t periods) {
  const auto per_period = static_cast<std::size_t>(spec.p + spec.q);
  return simulate(periodic_launch(spec), critical_angle(spec), periods * per_period);
}

namespace {

double event_distance(const CollisionEvent& a, const CollisionEvent& b, double energy) {
  if (a.wall != b.wall) {
    return std::numeric_limits<double>::infinity();
  }
  const double dq = norm(a.post.position() - b.post.position()) / energy;
  const double dp = std::hypot(a.rotating_post.u_bar - b.rotating_post.u_bar,
                               a.rotating_post.w_bar - b.rotating_post.w_bar) /
                    std::sqrt(energy);
  return std::max(dq, dp);
}

}  // namespace

OrbitClass classify_orbit(const Trajectory& traj, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  switch (traj.termination) {
    case Termination::Degenerate:
      return {OrbitKind::Sliding, 0, 0, 0, traj.termination};
    case Termination::VertexHit:
    case Termination::NoCollision:
      return {OrbitKind::Degenerate, 0, 0, 0, traj.termination};
    case Termination::Completed:
      break;
  }
  const auto& ev = traj.events;
  if (ev.size() < 2) {
    throw std::invalid_argument("classification needs at least two events");
  }
  const std::size_t n = ev.size();
  for (std::size_t k = 1; k <= n / 2; ++k) {
    if (event_distance(ev[k], ev[0], traj.energy) > tol) {
      continue;
    }
    bool repeats = true;
    for (std::size_t i = 0; i + k < n && repeats; ++i) {
      repeats = event_distance(ev[i + k], ev[i], traj.energy) <= tol;
    }
    if (!repeats) {
      continue;
    }
    const auto hits_a = std::count_if(ev.begin(), ev.begin() + static_cast<std::ptrdiff_t>(k),
                                      [](const CollisionEvent& e) { return e.wall == Wall::A; });
    return {OrbitKind::Periodic, static_cast<int>(k), static_cast<int>(hits_a), static_cast<int>(k) - static_cast<int>(hits_a),
            Termination::Completed};
  }
  return {OrbitKind::Dense, 0, 0, 0, Termination::Completed};
}

double coverage_fraction(const Trajectory& traj, GridSize grid, std::size_t event_limit) {
  if (grid.nx < 1 || grid.ny < 1) {
    throw std::invalid_argument("grid dimensions must be at least 1");
  }
  const std::size_t flights = std::min(event_limit, traj.events.size());
  if (flights == 0) {
    throw std::invalid_argument("coverage needs at least one flight");
  }
  const WedgeAngle& theta = traj.theta;
  const ConfigBounds box = config_bounds(traj.energy, theta);
  const double cell_x = box.x_tilde_max / grid.nx;
  const double cell_y = box.y_tilde_max / grid.ny;
  const double max_speed = std::sqrt(2.0 * traj.energy);
  const double dt_step = 0.01 * std::min(cell_x, cell_y) / max_speed;

  std::vector<char> visited(static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny), 0);
  auto mark = [&](double xt, double yt) {
    const int i = std::clamp(static_cast<int>(std::floor(xt / cell_x)), 0, grid.nx - 1);
    const int j = std::clamp(static_cast<int>(std::floor(yt / cell_y)), 0, grid.ny - 1);
    visited[static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.nx) + static_cast<std::size_t>(i)] = 1;
  };

  CartesianState from = traj.initial;
  for (std::size_t f = 0; f < flights; ++f) {
    const double duration = traj.events[f].t - from.t;
    const WedgeCoords wc = cartesian_to_wedge(from.position(), from.momentum(), theta);
    const auto steps = static_cast<std::size_t>(std::ceil(duration / dt_step));
    for (std::size_t k = 0; k <= steps; ++k) {
      const double tau = std::min(duration, static_cast<double>(k) * dt_step);
      mark(wc.x_tilde + wc.u_tilde * tau - 0.5 * theta.cos() * tau * tau,
           wc.y_tilde + wc.w_tilde * tau - 0.5 * theta.sin() * tau * tau);
    }
    from = traj.events[f].post;
  }
  const auto hit = std::count(visited.begin(), visited.end(), char{1});
  return static_cast<double>(hit) / static_cast<double>(visited.size());
}

OrbitClass sensitivity_probe(const OrbitSpec& spec, double eps, std::size_t collisions) {
  const WedgeAngle theta = critical_angle(spec);
  const MapState ic = periodic_initial_condition(spec);
  const double s = launch_arclength(Wall::A, ic.u_bar, ic.w_bar, spec.energy, theta);
  const CartesianState launch = launch_from_wall(Wall::A, s, ic.u_bar + eps, ic.w_bar, theta);
  return classify_orbit(simulate(launch, theta, collisions));
}

std::vector<PeriodicPoint> sweep_periodic_points(int p_max, int q_max, double energy, bool half) {
  if (p_max < 1 || q_max < 1) {
    throw std::invalid_argument("sweep limits must be at least 1");
  }
  std::vector<PeriodicPoint> points;
  for (int p = 1; p <= p_max; ++p) {
    for (int q = 1; q <= q_max; ++q) {
      if (std::gcd(p, q) != 1 || (half && q < p)) {
        continue;
      }
      const OrbitSpec spec{p, q, energy};
      points.push_back({p, q, critical_angle(spec).radians(), periodic_initial_condition(spec).u_bar});
    }
  }
  std::sort(points.begin(), points.end(), [](const PeriodicPoint& a, const PeriodicPoint& b) {
    return a.theta < b.theta || (a.theta == b.theta && a.p < b.p);
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const PeriodicPoint& a, const PeriodicPoint& b) { return a.theta == b.theta; }),
               points.end());
  return points;
}

BouncePeriods bounce_periods(double u_tilde0, double w_tilde0, const WedgeAngle& theta) {
  return {u_tilde0 / theta.cos(), w_tilde0 / theta.sin()};
}

BounceTimes bounce_times(double u_tilde0, double w_tilde0, const WedgeAngle& theta, int n) {
  if (!(u_tilde0 > 0.0) || !(w_tilde0 > 0.0)) {
    throw std::invalid_argument("launch momenta must be positive");
  }
  const BouncePeriods periods = bounce_periods(u_tilde0, w_tilde0, theta);
  BounceTimes times;
  for (int j = 1; j <= n; ++j) {
    times.along_a.push_back(2.0 * j * periods.t_a);
    times.along_b.push_back(2.0 * j * periods.t_b);
  }
  return times;
}

}  // namespace wedge
