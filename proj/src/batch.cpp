#include "wedge/batch.hpp"

#include <exception>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wedge {

namespace {

/// Exceptions must not escape an OpenMP region; keep the first and rethrow.
class ErrorSlot {
 public:
  template <typename F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(wedge_batch_error)
      if (!error_) {
        error_ = std::current_exception();
      }
    }
  }
  void rethrow() const {
    if (error_) {
      std::rethrow_exception(error_);
    }
  }

 private:
  std::exception_ptr error_;
};

template <typename T>
std::vector<T> unwrap(std::vector<std::optional<T>>& slots) {
  std::vector<T> out;
  out.reserve(slots.size());
  for (auto& slot : slots) {
    out.push_back(std::move(*slot));
  }
  return out;
}

}  // namespace

std::vector<Trajectory> simulate_batch(std::span<const BatchCase> cases, std::size_t collisions) {
  std::vector<std::optional<Trajectory>> slots(cases.size());
  const auto count = static_cast<std::ptrdiff_t>(cases.size());
  ErrorSlot errors;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    errors.run([&] { slots[k].emplace(simulate(cases[k].initial, cases[k].theta, collisions)); });
  }
  errors.rethrow();
  return unwrap(slots);
}

std::vector<Trajectory> simulate_batch_serial(std::span<const BatchCase> cases, std::size_t collisions) {
  std::vector<Trajectory> out;
  out.reserve(cases.size());
  for (const BatchCase& c : cases) {
    out.push_back(simulate(c.initial, c.theta, collisions));
  }
  return out;
}

std::vector<OrbitClass> sensitivity_batch(std::span<const SensitivityCase> cases, std::size_t collisions) {
  std::vector<OrbitClass> out(cases.size(), OrbitClass{OrbitKind::Dense});
  const auto count = static_cast<std::ptrdiff_t>(cases.size());
  ErrorSlot errors;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    errors.run([&] { out[k] = sensitivity_probe(cases[k].spec, cases[k].eps, collisions); });
  }
  errors.rethrow();
  return out;
}

std::vector<OrbitClass> sensitivity_batch_serial(std::span<const SensitivityCase> cases, std::size_t collisions) {
  std::vector<OrbitClass> out;
  out.reserve(cases.size());
  for (const SensitivityCase& c : cases) {
    out.push_back(sensitivity_probe(c.spec, c.eps, collisions));
  }
  return out;
}

int batch_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace wedge
