#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "wedge/collision_maps.hpp"
#include "wedge/dynamics.hpp"

namespace wedge {

/// Coprime positive integers selecting the critical angle arctan(p / q).
struct OrbitSpec {
  int p;
  int q;
  double energy;
};

/// Throws std::invalid_argument unless p, q >= 1, gcd(p, q) = 1 and E > 0.
void validate(const OrbitSpec& spec);

/// Half-periods of the two one-dimensional bouncers: t_a = u0 / cos(theta)
/// for the motion along wall A, t_b = w0 / sin(theta) along wall B.
struct BouncePeriods {
  double t_a;
  double t_b;
};

enum class OrbitKind { Periodic, Dense, Sliding, Degenerate };

struct OrbitClass {
  OrbitKind kind;
  int period{0};
  int hits_a{0};
  int hits_b{0};
  Termination reason{Termination::Completed};

  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
};

std::string describe(const OrbitClass& c);

inline constexpr double kPeriodicityTolerance = 1e-8;

WedgeAngle critical_angle(const OrbitSpec& spec);

/// T_a / T_b for a launch with equal along-wall integrals: tan(theta).
double period_ratio(const WedgeAngle& theta);

/// u* = sqrt(E) (q - p) / (q + p), w* = sqrt(E).
MapState periodic_initial_condition(const OrbitSpec& spec);

/// Arclength along the wall at which a launch with (u_bar, w_bar) has energy E.
double launch_arclength(Wall wall, double u_bar, double w_bar, double energy, const WedgeAngle& theta);

/// Wall-A launch carrying the periodic initial condition at the critical angle.
CartesianState periodic_launch(const OrbitSpec& spec);

/// Simulates `periods` * (p + q) collisions from periodic_launch(spec).
Trajectory build_periodic_orbit(const OrbitSpec& spec, std::size_t periods = 1);

/// Recurrence-based classification. Dense means no recurrence was found
/// within the available events; it is not a proof of density.
OrbitClass classify_orbit(const Trajectory& traj, double tol = kPeriodicityTolerance);

struct GridSize {
  int nx;
  int ny;
};

/// Fraction of cells of the (x_tilde, y_tilde) bounding box touched by the
/// flight arcs leading to the first `event_limit` events.
double coverage_fraction(const Trajectory& traj, GridSize grid,
                         std::size_t event_limit = std::numeric_limits<std::size_t>::max());

/// Launch from the unperturbed position with u* + eps and classify.
OrbitClass sensitivity_probe(const OrbitSpec& spec, double eps, std::size_t collisions = 1000);

struct PeriodicPoint {
  int p;
  int q;
  double theta;
  double u_bar;
};

/// (arctan(p/q), u*) for every coprime pair, sorted by theta. With `half`,
/// only q > p plus (1, 1).
std::vector<PeriodicPoint> sweep_periodic_points(int p_max, int q_max, double energy, bool half = false);

BouncePeriods bounce_periods(double u_tilde0, double w_tilde0, const WedgeAngle& theta);

struct BounceTimes {
  std::vector<double> along_a;  // 2 j T_a, bounces of x_tilde on wall B
  std::vector<double> along_b;  // 2 k T_b, bounces of y_tilde on wall A
};

BounceTimes bounce_times(double u_tilde0, double w_tilde0, const WedgeAngle& theta, int n);

}  // namespace wedge
