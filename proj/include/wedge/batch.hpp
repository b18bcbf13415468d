#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wedge/dynamics.hpp"
#include "wedge/orbits.hpp"

namespace wedge {

struct BatchCase {
  CartesianState initial;
  WedgeAngle theta;
};

struct SensitivityCase {
  OrbitSpec spec;
  double eps;
};

/// Independent trajectories, one per case, distributed over OpenMP threads.
/// Results are in input order and identical to simulate_batch_serial.
std::vector<Trajectory> simulate_batch(std::span<const BatchCase> cases, std::size_t collisions);
std::vector<Trajectory> simulate_batch_serial(std::span<const BatchCase> cases, std::size_t collisions);

std::vector<OrbitClass> sensitivity_batch(std::span<const SensitivityCase> cases, std::size_t collisions);
std::vector<OrbitClass> sensitivity_batch_serial(std::span<const SensitivityCase> cases, std::size_t collisions);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int batch_threads();

}  // namespace wedge
