#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wedge/dynamics.hpp"
#include "wedge/orbits.hpp"

namespace wedge {

enum class Format { Csv, Json, Svg };

/// "csv", "json" or "svg"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// Format implied by the file extension.
Format format_from_path(const std::filesystem::path& path);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest-stable text form used by every exporter: 17 significant digits.
std::string format_double(double v);

/// One header line, then one row per event:
/// event_index,t,wall,x,y,u_post,w_post,u_bar_post,w_bar_post,x_tilde,y_tilde,H,Hx_tilde,Hy_tilde
void write_csv(const Trajectory& traj, std::ostream& out);

/// Header object (theta, E, termination, initial state, integrals) plus the
/// CSV columns per event and the pre-collision momentum.
void write_json(const Trajectory& traj, std::ostream& out);

/// Inverse of write_json; floats are reproduced bit for bit.
Trajectory read_json(std::istream& in);

void write_sweep_csv(std::span<const PeriodicPoint> points, std::ostream& out);
void write_sweep_json(std::span<const PeriodicPoint> points, double energy, std::ostream& out);

/// Writes `contents` to `path`, raising IoError with the path on failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

void export_trajectory(const Trajectory& traj, Format format, const std::filesystem::path& path);
void export_sweep(std::span<const PeriodicPoint> points, double energy, Format format,
                  const std::filesystem::path& path);

}  // namespace wedge
