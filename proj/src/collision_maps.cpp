#include "wedge/collision_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wedge {

std::string_view to_string(MapId id) {
  switch (id) {
    case MapId::FA:
      return "FA";
    case MapId::GA:
      return "GA";
    case MapId::FB:
      return "FB";
    case MapId::GB:
      return "GB";
  }
  return "?";
}

Wall domain(MapId id) { return (id == MapId::FA || id == MapId::FB) ? Wall::A : Wall::B; }

Wall codomain(MapId id) { return (id == MapId::FA || id == MapId::GB) ? Wall::A : Wall::B; }

MapId map_between(Wall from, Wall to) {
  if (from == Wall::A) {
    return to == Wall::A ? MapId::FA : MapId::FB;
  }
  return to == Wall::B ? MapId::GA : MapId::GB;
}

namespace {

void validate(const MapState& s) {
  if (!(s.energy > 0.0) || !std::isfinite(s.u_bar) || !(s.w_bar >= 0.0)) {
    throw MapError(MapError::Kind::InvalidState, "map state needs E > 0, finite u_bar and w_bar >= 0");
  }
}

/// sqrt(2E - w^2): the normal momentum on arrival at the opposite wall.
double opposite_normal(const MapState& s) {
  const double radicand = 2.0 * s.energy - s.w_bar * s.w_bar;
  if (radicand < -kRadicandTolerance * std::max(1.0, 2.0 * s.energy)) {
    throw MapError(MapError::Kind::EnergyViolation, "normal momentum exceeds the energy budget");
  }
  return std::sqrt(std::max(0.0, radicand));
}

}  // namespace

MapState apply_map(MapId id, const MapState& s, const WedgeAngle& theta) {
  validate(s);
  const double u = s.u_bar;
  const double w = s.w_bar;
  switch (id) {
    case MapId::FA:
      return {u - 2.0 * w * theta.cot(), w, s.energy};
    case MapId::GA:
      return {u - 2.0 * w * theta.tan(), w, s.energy};
    case MapId::FB: {
      const double w_next = opposite_normal(s);
      return {w - (u + w_next) * theta.tan(), w_next, s.energy};
    }
    case MapId::GB: {
      const double w_next = opposite_normal(s);
      return {w - (u + w_next) * theta.cot(), w_next, s.energy};
    }
  }
  throw MapError(MapError::Kind::InvalidState, "unknown map id");
}

MapState fixed_point(MapId id, double energy, const WedgeAngle& theta) {
  if (!(energy > 0.0)) {
    throw std::invalid_argument("energy must be positive");
  }
  const double root_e = std::sqrt(energy);
  switch (id) {
    case MapId::FB:
      return {root_e * (1.0 - theta.tan()) / (1.0 + theta.tan()), root_e, energy};
    case MapId::GB:
      return {root_e * (theta.cot() - 1.0) / (theta.cot() + 1.0), root_e, energy};
    case MapId::FA:
    case MapId::GA:
      break;
  }
  throw std::invalid_argument("same-wall maps have the sliding family (c, 0) as fixed points");
}

MapState physical_fixed_point_gb(double energy, const WedgeAngle& theta) {
  if (!(energy > 0.0)) {
    throw std::invalid_argument("energy must be positive");
  }
  const double root_e = std::sqrt(energy);
  return {root_e * (1.0 - theta.cot()) / (1.0 + theta.cot()), root_e, energy};
}

bool reflection_period1_possible(const WedgeAngle& theta) {
  return std::abs(theta.radians() - std::numbers::pi / 4) <= 1e-12;
}

MapState to_map_state(const CollisionEvent& event, double energy) {
  const RotatingFrameMomentum& r = event.rotating_post;
  return {r.u_bar, event.wall == Wall::A ? r.w_bar : -r.w_bar, energy};
}

}  // namespace wedge
