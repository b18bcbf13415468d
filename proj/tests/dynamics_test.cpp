#include "wedge/dynamics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"

using namespace wedge;
using wedge::testing::random_case;
using wedge::testing::rel;

namespace {

constexpr double kPi = std::numbers::pi;

/// Brute-force oracle: march the exact parabola in small steps and report the
/// first step at which the point leaves the region, using the wall equations
/// directly. Independent of next_collision's quadratic solve.
struct Crossing {
  double t;
  Wall wall;
};

Crossing march_to_wall(const CartesianState& s, double theta, double dt) {
  const double cot = 1.0 / std::tan(theta);
  const double tan = std::tan(theta);
  for (long k = 1;; ++k) {
    const double t = k * dt;
    const double x = s.x + s.u * t;
    const double y = s.y + s.w * t - 0.5 * t * t;
    if (x >= 0 && y < x * cot) return {t, Wall::A};
    if (x < 0 && y < -x * tan) return {t, Wall::B};
  }
}

TEST(Hamiltonian, Examples) {
  EXPECT_EQ(hamiltonian({0, 1, 0, 0, 0}), 1.0);
  EXPECT_EQ(hamiltonian({1, 1, 0, -1, 0}), 1.5);
  EXPECT_EQ(hamiltonian({0, 0, 3, 4, 0}), 12.5);
}

TEST(WedgeHamiltonians, Examples) {
  const WedgeIntegrals h = wedge_hamiltonians({1, 1, -1, 0, 0}, WedgeAngle(kPi / 4));
  EXPECT_NEAR(h.hx, 1.25, 1e-15);
  EXPECT_NEAR(h.hy, 0.25, 1e-15);
  const WedgeIntegrals z = wedge_hamiltonians({0, 0, 0, 0, 0}, WedgeAngle(0.3));
  EXPECT_EQ(z.hx, 0.0);
  EXPECT_EQ(z.hy, 0.0);
}

TEST(WedgeHamiltonians, SumToTheEnergy) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const auto c = random_case(rng);
    const WedgeIntegrals h = wedge_hamiltonians(c.initial, c.theta);
    EXPECT_NEAR(h.hx + h.hy, hamiltonian(c.initial), 1e-12);
  }
}

TEST(FreeFlight, Examples) {
  EXPECT_EQ(free_flight({0, 1, 0, 0, 0}, 1.0), (CartesianState{0, 0.5, 0, -1, 1}));
  EXPECT_EQ(free_flight({0, 0, 1, 1, 0}, 2.0), (CartesianState{2, 0, 1, -1, 2}));
  EXPECT_THROW(free_flight({0, 0, 0, 0, 0}, -1e-3), std::invalid_argument);
}

TEST(FreeFlight, ConservesEnergy) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> v(-3, 3);
  std::uniform_real_distribution<double> dt(0, 5);
  for (int i = 0; i < 1000; ++i) {
    const CartesianState s{v(rng), v(rng), v(rng), v(rng), 0};
    const double before = hamiltonian(s);
    EXPECT_LE(std::abs(hamiltonian(free_flight(s, dt(rng))) - before), 1e-13 * std::max(1.0, std::abs(before)));
  }
}

TEST(NextCollision, VerticalThrowFromWallAReturnsToTheSamePoint) {
  const CollisionPrediction c = next_collision({1, 1, 0, 1, 0}, WedgeAngle(kPi / 4));
  EXPECT_EQ(c.status, CollisionStatus::Ok);
  EXPECT_EQ(c.wall, Wall::A);
  EXPECT_NEAR(c.dt, 2.0, 1e-14);
}

TEST(NextCollision, HorizontalLaunchLandsOnWallB) {
  const CartesianState s{1, 1, -1, 0, 0};
  const Crossing oracle = march_to_wall(s, kPi / 4, 1e-6);
  const CollisionPrediction c = next_collision(s, WedgeAngle(kPi / 4));
  EXPECT_EQ(c.status, CollisionStatus::Ok);
  EXPECT_EQ(c.wall, oracle.wall);
  EXPECT_EQ(c.wall, Wall::B);
  EXPECT_NEAR(c.dt, oracle.t, 1e-5);
  // 1 - t^2/2 = t - 1  =>  t = sqrt(5) - 1
  EXPECT_NEAR(c.dt, std::sqrt(5.0) - 1.0, 1e-14);
}

TEST(NextCollision, AgreesWithMarchingOracleOnRandomStates) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const auto c = random_case(rng);
    const Crossing oracle = march_to_wall(c.initial, c.theta.radians(), 1e-5);
    const CollisionPrediction p = next_collision(c.initial, c.theta);
    ASSERT_EQ(p.status, CollisionStatus::Ok);
    EXPECT_EQ(p.wall, oracle.wall);
    EXPECT_LE(oracle.t - p.dt, 1e-5 + 1e-12);
    EXPECT_GE(oracle.t - p.dt, -1e-12);
    const CartesianState landed = free_flight(c.initial, p.dt);
    EXPECT_LE(std::abs(signed_distance(landed.position(), p.wall, c.theta)), 1e-10);
  }
}

TEST(NextCollision, GrazingLaunchIsDegenerate) {
  const WedgeAngle theta(kPi / 4);
  const CartesianState sliding = launch_from_wall(Wall::A, 1.0, 0.5, 1e-12, theta);
  EXPECT_EQ(next_collision(sliding, theta).status, CollisionStatus::Degenerate);
  EXPECT_EQ(simulate(sliding, theta, 5).termination, Termination::Degenerate);
}

TEST(NextCollision, LandingAtTheVertexIsReported) {
  // From the vertex with equal wall-aligned momenta at tan(theta) = 1 both
  // bouncers return to zero together.
  const WedgeAngle theta(kPi / 4);
  const PhasePoint pp = wedge_to_cartesian({0, 0, 1, 1}, theta);
  const CartesianState s{pp.q.x, pp.q.y, pp.p.x, pp.p.y, 0};
  EXPECT_EQ(next_collision(s, theta).status, CollisionStatus::VertexHit);
  EXPECT_EQ(simulate(s, theta, 3).termination, Termination::VertexHit);
  EXPECT_EQ(decoupled_simulate(s, theta, 3).termination, Termination::VertexHit);
}

TEST(Reflect, Examples) {
  const WedgeAngle theta(kPi / 4);
  const CartesianState r = reflect({1, 1, 0, -1, 0}, Wall::A, theta);
  EXPECT_NEAR(r.u, -1.0, 1e-15);
  EXPECT_NEAR(r.w, 0.0, 1e-15);
  EXPECT_NEAR(std::hypot(r.u, r.w), 1.0, 1e-15);
  // tangential component unchanged
  const Vec2 t = wall_frame(Wall::A, theta).tangent;
  EXPECT_NEAR(dot({r.u, r.w}, t), dot({0, -1}, t), 1e-15);

  const Vec2 n = inward_normal(Wall::B, theta);
  const CartesianState head_on = reflect({-1, 1, -2 * n.x, -2 * n.y, 0}, Wall::B, theta);
  EXPECT_NEAR(head_on.u, 2 * n.x, 1e-15);
  EXPECT_NEAR(head_on.w, 2 * n.y, 1e-15);

  const CartesianState grazing = reflect({1, 1, t.x, t.y, 0}, Wall::A, theta);
  EXPECT_NEAR(grazing.u, t.x, 1e-15);
  EXPECT_NEAR(grazing.w, t.y, 1e-15);
}

TEST(Reflect, Errors) {
  const WedgeAngle theta(kPi / 4);
  try {
    reflect({0, 1, 0, -1, 0}, Wall::A, theta);
    FAIL() << "expected NotOnWall";
  } catch (const ReflectError& e) {
    EXPECT_EQ(e.kind(), ReflectError::Kind::NotOnWall);
  }
  try {
    reflect({1, 1, -1, 1, 0}, Wall::A, theta);
    FAIL() << "expected OutgoingAlready";
  } catch (const ReflectError& e) {
    EXPECT_EQ(e.kind(), ReflectError::Kind::OutgoingAlready);
  }
}

TEST(Reflect, IsAnInvolution) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> v(-3, 3);
  std::uniform_real_distribution<double> angle(0.01, kPi / 2 - 0.01);
  for (int i = 0; i < 1000; ++i) {
    const WedgeAngle theta(angle(rng));
    const Vec2 p{v(rng), v(rng)};
    for (const Wall w : {Wall::A, Wall::B}) {
      const Vec2 n = inward_normal(w, theta);
      const Vec2 twice = reflect_momentum(reflect_momentum(p, n), n);
      EXPECT_LE(norm(twice - p), 1e-14 * std::max(1.0, norm(p)));
      EXPECT_NEAR(norm(reflect_momentum(p, n)), norm(p), 1e-14 * std::max(1.0, norm(p)));
    }
  }
}

TEST(LaunchFromWall, PlacesStateOnTheWall) {
  const WedgeAngle theta(0.6);
  for (const Wall w : {Wall::A, Wall::B}) {
    const CartesianState s = launch_from_wall(w, 1.3, 0.4, 0.8, theta);
    EXPECT_NEAR(signed_distance(s.position(), w, theta), 0.0, 1e-15);
    EXPECT_NEAR(dot(s.momentum(), inward_normal(w, theta)), 0.8, 1e-15);
    EXPECT_NEAR(dot(s.momentum(), wall_frame(w, theta).tangent), 0.4, 1e-15);
  }
  EXPECT_THROW(launch_from_wall(Wall::A, 1.0, 0.0, -0.1, theta), std::invalid_argument);
}

TEST(Simulate, SymmetricPeriodOneOrbitAlternatesBetweenMirrorPoints) {
  const WedgeAngle theta(kPi / 4);
  // At (1, 1) on wall A with (u, w) = (0, sqrt(E)) the energy is E = 2.
  const CartesianState launch = launch_from_wall(Wall::A, std::sqrt(2.0), 0.0, std::sqrt(2.0), theta);
  ASSERT_NEAR(hamiltonian(launch), 2.0, 1e-15);
  const Trajectory traj = simulate(launch, theta, 20);
  ASSERT_EQ(traj.events.size(), 20u);
  for (std::size_t i = 0; i < traj.events.size(); ++i) {
    const CollisionEvent& e = traj.events[i];
    const bool on_b = i % 2 == 0;
    EXPECT_EQ(e.wall, on_b ? Wall::B : Wall::A);
    EXPECT_NEAR(e.post.x, on_b ? -1.0 : 1.0, 1e-12);
    EXPECT_NEAR(e.post.y, 1.0, 1e-12);
  }
}

TEST(Simulate, ZeroCollisionsKeepsTheInitialState) {
  const WedgeAngle theta(0.5);
  const CartesianState s = launch_from_wall(Wall::A, 1.0, 0.0, 1.0, theta);
  const Trajectory traj = simulate(s, theta, 0);
  EXPECT_TRUE(traj.events.empty());
  EXPECT_EQ(traj.initial, s);
  EXPECT_EQ(traj.termination, Termination::Completed);
}

TEST(Simulate, RejectsInvalidInitialStates) {
  const WedgeAngle theta(0.5);
  EXPECT_THROW(simulate({5, 0, 0, 0, 0}, theta, 1), std::invalid_argument);
  EXPECT_THROW(simulate({0, 0, 0, 0, 0}, theta, 1), std::invalid_argument);
  const Vec2 n = inward_normal(Wall::A, theta);
  const Vec2 q = wall_point(Wall::A, 1.0, theta);
  EXPECT_THROW(simulate({q.x, q.y, -n.x, -n.y, 0}, theta, 1), std::invalid_argument);
}

TEST(Simulate, EventInvariants) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 20; ++i) {
    const auto c = random_case(rng);
    const Trajectory traj = simulate(c.initial, c.theta, 500);
    ASSERT_EQ(traj.termination, Termination::Completed);
    double last_t = traj.initial.t;
    for (const CollisionEvent& e : traj.events) {
      EXPECT_GT(e.t, last_t);
      last_t = e.t;
      EXPECT_EQ(e.pre.position(), e.post.position());
      EXPECT_NEAR(norm(e.pre.momentum()), norm(e.post.momentum()), 1e-13);
      EXPECT_GE(dot(e.post.momentum(), inward_normal(e.wall, c.theta)), 0.0);
      EXPECT_LE(std::abs(signed_distance(e.post.position(), e.wall, c.theta)), 1e-10);
      EXPECT_EQ(e.rotating_post.phi, frame_angle(e.wall, c.theta));
    }
  }
}

TEST(Simulate, ConservesEnergyAndBothIntegrals) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 10; ++i) {
    const auto c = random_case(rng);
    const Trajectory traj = simulate(c.initial, c.theta, 2000);
    const ConfigBounds box = config_bounds(traj.energy, c.theta);
    for (const CollisionEvent& e : traj.events) {
      EXPECT_LE(std::abs(hamiltonian(e.post) - traj.energy) / traj.energy, 1e-9);
      const WedgeIntegrals h = wedge_hamiltonians(e.post, c.theta);
      EXPECT_LE(std::abs(h.hx - traj.integrals.hx) / traj.energy, 1e-9);
      EXPECT_LE(std::abs(h.hy - traj.integrals.hy) / traj.energy, 1e-9);
      const WedgeCoords wc = cartesian_to_wedge(e.post.position(), e.post.momentum(), c.theta);
      EXPECT_GE(wc.x_tilde, -1e-9);
      EXPECT_GE(wc.y_tilde, -1e-9);
      EXPECT_LE(wc.x_tilde, box.x_tilde_max + 1e-9);
      EXPECT_LE(wc.y_tilde, box.y_tilde_max + 1e-9);
    }
  }
}

void expect_same_events(const Trajectory& a, const Trajectory& b, double tol) {
  ASSERT_EQ(a.events.size(), b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    const CollisionEvent& x = a.events[i];
    const CollisionEvent& y = b.events[i];
    ASSERT_EQ(x.wall, y.wall) << "event " << i;
    EXPECT_LE(rel(x.t, y.t), tol);
    EXPECT_LE(norm(x.post.position() - y.post.position()), tol);
    EXPECT_LE(norm(x.post.momentum() - y.post.momentum()), tol);
    EXPECT_LE(norm(x.pre.momentum() - y.pre.momentum()), tol);
  }
}

TEST(DecoupledSimulate, MatchesEventDrivenSimulation) {
  const WedgeAngle quarter(kPi / 4);
  const CartesianState sym = launch_from_wall(Wall::A, std::sqrt(2.0), 0.0, std::sqrt(2.0), quarter);
  expect_same_events(simulate(sym, quarter, 20), decoupled_simulate(sym, quarter, 20), 1e-9);

  const WedgeAngle sixty = WedgeAngle::from_degrees(60);
  const CartesianState fig = launch_from_wall(Wall::A, 1.0, 0.0, 1.0, sixty);
  expect_same_events(simulate(fig, sixty, 50), decoupled_simulate(fig, sixty, 50), 1e-9);

  std::mt19937_64 rng(27);
  for (int i = 0; i < 20; ++i) {
    const auto c = random_case(rng);
    expect_same_events(simulate(c.initial, c.theta, 200), decoupled_simulate(c.initial, c.theta, 200), 1e-9);
  }
}

TEST(DecoupledSimulate, SameWallHitsAreSeparatedByTheBouncePeriod) {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 10; ++i) {
    const auto c = random_case(rng);
    const Trajectory traj = decoupled_simulate(c.initial, c.theta, 300);
    // x_tilde bounces on wall B with speed sqrt(2 Hx), y_tilde on A with sqrt(2 Hy).
    const double period_b = 2.0 * std::sqrt(2.0 * traj.integrals.hx) / c.theta.cos();
    const double period_a = 2.0 * std::sqrt(2.0 * traj.integrals.hy) / c.theta.sin();
    double last_a = -1;
    double last_b = -1;
    for (const CollisionEvent& e : traj.events) {
      double& last = e.wall == Wall::A ? last_a : last_b;
      if (last >= 0) {
        EXPECT_NEAR(e.t - last, e.wall == Wall::A ? period_a : period_b, 1e-9);
      }
      last = e.t;
    }
  }
}

TEST(Simulate, TimeReversalRetracesEvents) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 10; ++i) {
    const auto c = random_case(rng);
    const Trajectory fwd = simulate(c.initial, c.theta, 60);
    const std::size_t k = 40;
    const CollisionEvent& turn = fwd.events[k];
    const CartesianState reversed{turn.pre.x, turn.pre.y, -turn.pre.u, -turn.pre.w, 0.0};
    const Trajectory back = simulate(reversed, c.theta, k);
    ASSERT_EQ(back.events.size(), k);
    for (std::size_t j = 0; j < k; ++j) {
      const CollisionEvent& orig = fwd.events[k - 1 - j];
      const CollisionEvent& rev = back.events[j];
      EXPECT_EQ(rev.wall, orig.wall);
      EXPECT_LE(norm(rev.post.position() - orig.post.position()), 1e-8);
      EXPECT_LE(norm(rev.pre.momentum() + orig.post.momentum()), 1e-8);
      EXPECT_NEAR(rev.t, turn.t - orig.t, 1e-8);
    }
  }
}

}  // namespace
