#pragma once

#include <stdexcept>
#include <string_view>

#include "wedge/dynamics.hpp"
#include "wedge/geometry.hpp"

namespace wedge {

/// Collision maps between consecutive wall hits.
///   FA: A -> A   GA: B -> B   FB: A -> B   GB: B -> A
enum class MapId { FA, GA, FB, GB };

std::string_view to_string(MapId id);
Wall domain(MapId id);
Wall codomain(MapId id);
MapId map_between(Wall from, Wall to);

/// Post-collision momentum at a wall hit: u_bar along the wall away from the
/// vertex, w_bar >= 0 along the inward normal. The energy is carried because
/// the cross-wall maps need it.
struct MapState {
  double u_bar;
  double w_bar;
  double energy;
};

class MapError : public std::domain_error {
 public:
  enum class Kind { EnergyViolation, InvalidState };
  MapError(Kind kind, const char* what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Radicands 2E - w^2 in [-kRadicandTolerance, 0) clamp to zero.
inline constexpr double kRadicandTolerance = 1e-12;

MapState apply_map(MapId id, const MapState& s, const WedgeAngle& theta);

/// Closed-form FB / GB fixed points:
///   FB: u* = sqrt(E) (1 - tan) / (1 + tan)
///   GB: u* = sqrt(E) (cot - 1) / (cot + 1)
/// with w* = sqrt(E). The GB expression equals the FB one for every theta.
MapState fixed_point(MapId id, double energy, const WedgeAngle& theta);

/// The state on wall B that GB sends to identical numbers on wall A:
/// u* = sqrt(E) (1 - cot) / (1 + cot). Mirror image of the FB fixed point.
MapState physical_fixed_point_gb(double energy, const WedgeAngle& theta);

/// A period-one orbit reflecting momentum on both rotating-frame axes
/// exists only for the symmetric wedge.
bool reflection_period1_possible(const WedgeAngle& theta);

/// Convert a simulated event into map coordinates. On wall B the rotating
/// frame's second axis points out of the region, so w_bar changes sign.
MapState to_map_state(const CollisionEvent& event, double energy);

}  // namespace wedge
