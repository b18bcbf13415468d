#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "wedge/batch.hpp"
#include "wedge/geometry.hpp"

namespace {

std::vector<wedge::BatchCase> make_cases(std::size_t n) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> angle(0.2, std::numbers::pi / 2 - 0.2);
  std::uniform_real_distribution<double> s(0.5, 2.0);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  std::vector<wedge::BatchCase> cases;
  cases.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const wedge::WedgeAngle theta(angle(rng));
    cases.push_back({wedge::launch_from_wall(wedge::Wall::A, s(rng), u(rng), 1.0, theta), theta});
  }
  return cases;
}

void BM_SimulateSerial(benchmark::State& state) {
  const auto cases = make_cases(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge::simulate_batch_serial(cases, 10000));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 10000);
}

void BM_SimulateParallel(benchmark::State& state) {
  const auto cases = make_cases(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge::simulate_batch(cases, 10000));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 10000);
  state.counters["threads"] = wedge::batch_threads();
}

void BM_SensitivityParallel(benchmark::State& state) {
  std::vector<wedge::SensitivityCase> cases;
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q)
      if (std::gcd(p, q) == 1) cases.push_back({{p, q, 1.0}, 1e-3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge::sensitivity_batch(cases, 1000));
  }
}

}  // namespace

BENCHMARK(BM_SimulateSerial)->Arg(16)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->Arg(16)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SensitivityParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
