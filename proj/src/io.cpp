#include "wedge/io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "wedge/plot.hpp"

namespace wedge {

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "svg") return Format::Svg;
  throw std::invalid_argument(fmt::format("unknown output format '{}'", name));
}

Format format_from_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  if (!ext.empty() && ext.front() == '.') {
    ext.erase(0, 1);
  }
  return parse_format(ext);
}

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

namespace {

constexpr std::string_view kCsvHeader =
    "event_index,t,wall,x,y,u_post,w_post,u_bar_post,w_bar_post,x_tilde,y_tilde,H,Hx_tilde,Hy_tilde";

struct EventRow {
  const CollisionEvent& event;
  WedgeCoords wc;
  double h;
  WedgeIntegrals integrals;
};

EventRow row_for(const CollisionEvent& e, const WedgeAngle& theta) {
  return {e, cartesian_to_wedge(e.post.position(), e.post.momentum(), theta), hamiltonian(e.post),
          wedge_hamiltonians(e.post, theta)};
}

std::string state_json(const CartesianState& s) {
  return fmt::format(R"({{"x": {}, "y": {}, "u": {}, "w": {}, "t": {}}})", format_double(s.x), format_double(s.y),
                     format_double(s.u), format_double(s.w), format_double(s.t));
}

}  // namespace

void write_csv(const Trajectory& traj, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (std::size_t i = 0; i < traj.events.size(); ++i) {
    const EventRow r = row_for(traj.events[i], traj.theta);
    const CollisionEvent& e = r.event;
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", i, format_double(e.t), to_string(e.wall),
                       format_double(e.post.x), format_double(e.post.y), format_double(e.post.u),
                       format_double(e.post.w), format_double(e.rotating_post.u_bar),
                       format_double(e.rotating_post.w_bar), format_double(r.wc.x_tilde),
                       format_double(r.wc.y_tilde), format_double(r.h), format_double(r.integrals.hx),
                       format_double(r.integrals.hy));
  }
}

void write_json(const Trajectory& traj, std::ostream& out) {
  out << "{\n";
  out << fmt::format(
      "  \"header\": {{\"theta\": {}, \"theta_deg\": {}, \"E\": {}, \"termination\": \"{}\", "
      "\"Hx_tilde\": {}, \"Hy_tilde\": {}, \"initial\": {}}},\n",
      format_double(traj.theta.radians()), format_double(traj.theta.degrees()), format_double(traj.energy),
      to_string(traj.termination), format_double(traj.integrals.hx), format_double(traj.integrals.hy),
      state_json(traj.initial));
  out << "  \"events\": [";
  for (std::size_t i = 0; i < traj.events.size(); ++i) {
    const EventRow r = row_for(traj.events[i], traj.theta);
    const CollisionEvent& e = r.event;
    out << (i == 0 ? "\n" : ",\n");
    out << fmt::format(
        "    {{\"event_index\": {}, \"t\": {}, \"wall\": \"{}\", \"x\": {}, \"y\": {}, \"u_post\": {}, "
        "\"w_post\": {}, \"u_bar_post\": {}, \"w_bar_post\": {}, \"x_tilde\": {}, \"y_tilde\": {}, \"H\": {}, "
        "\"Hx_tilde\": {}, \"Hy_tilde\": {}, \"u_pre\": {}, \"w_pre\": {}}}",
        i, format_double(e.t), to_string(e.wall), format_double(e.post.x), format_double(e.post.y),
        format_double(e.post.u), format_double(e.post.w), format_double(e.rotating_post.u_bar),
        format_double(e.rotating_post.w_bar), format_double(r.wc.x_tilde), format_double(r.wc.y_tilde),
        format_double(r.h), format_double(r.integrals.hx), format_double(r.integrals.hy),
        format_double(e.pre.u), format_double(e.pre.w));
  }
  out << (traj.events.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
}

namespace {

Termination parse_termination(const std::string& name) {
  for (const Termination t :
       {Termination::Completed, Termination::VertexHit, Termination::Degenerate, Termination::NoCollision}) {
    if (to_string(t) == name) {
      return t;
    }
  }
  throw std::invalid_argument("unknown termination '" + name + "'");
}

Wall parse_wall(const std::string& name) {
  if (name == "A") return Wall::A;
  if (name == "B") return Wall::B;
  throw std::invalid_argument("unknown wall '" + name + "'");
}

}  // namespace

Trajectory read_json(std::istream& in) {
  const nlohmann::json doc = nlohmann::json::parse(in);
  const auto& header = doc.at("header");
  const auto& init = header.at("initial");
  const WedgeAngle theta(header.at("theta").get<double>());
  Trajectory traj{{init.at("x").get<double>(), init.at("y").get<double>(), init.at("u").get<double>(),
                   init.at("w").get<double>(), init.at("t").get<double>()},
                  theta,
                  {},
                  header.at("E").get<double>(),
                  {header.at("Hx_tilde").get<double>(), header.at("Hy_tilde").get<double>()},
                  parse_termination(header.at("termination").get<std::string>())};
  for (const auto& row : doc.at("events")) {
    const Wall wall = parse_wall(row.at("wall").get<std::string>());
    const double t = row.at("t").get<double>();
    const double x = row.at("x").get<double>();
    const double y = row.at("y").get<double>();
    const CartesianState pre{x, y, row.at("u_pre").get<double>(), row.at("w_pre").get<double>(), t};
    const CartesianState post{x, y, row.at("u_post").get<double>(), row.at("w_post").get<double>(), t};
    traj.events.push_back({wall, t, pre, post,
                           {row.at("u_bar_post").get<double>(), row.at("w_bar_post").get<double>(),
                            frame_angle(wall, theta)}});
  }
  return traj;
}

void write_sweep_csv(std::span<const PeriodicPoint> points, std::ostream& out) {
  out << "p,q,theta,theta_deg,u_bar\n";
  for (const PeriodicPoint& pt : points) {
    out << fmt::format("{},{},{},{},{}\n", pt.p, pt.q, format_double(pt.theta),
                       format_double(WedgeAngle(pt.theta).degrees()), format_double(pt.u_bar));
  }
}

void write_sweep_json(std::span<const PeriodicPoint> points, double energy, std::ostream& out) {
  out << fmt::format("{{\n  \"E\": {},\n  \"points\": [", format_double(energy));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const PeriodicPoint& pt = points[i];
    out << (i == 0 ? "\n" : ",\n");
    out << fmt::format(R"(    {{"p": {}, "q": {}, "theta": {}, "theta_deg": {}, "u_bar": {}}})", pt.p, pt.q,
                       format_double(pt.theta), format_double(WedgeAngle(pt.theta).degrees()),
                       format_double(pt.u_bar));
  }
  out << (points.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!file) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

void export_trajectory(const Trajectory& traj, Format format, const std::filesystem::path& path) {
  std::ostringstream out;
  switch (format) {
    case Format::Csv:
      write_csv(traj, out);
      break;
    case Format::Json:
      write_json(traj, out);
      break;
    case Format::Svg:
      out << render_trajectory_svg(traj);
      break;
  }
  write_file(path, out.str());
}

void export_sweep(std::span<const PeriodicPoint> points, double energy, Format format,
                  const std::filesystem::path& path) {
  std::ostringstream out;
  switch (format) {
    case Format::Csv:
      write_sweep_csv(points, out);
      break;
    case Format::Json:
      write_sweep_json(points, energy, out);
      break;
    case Format::Svg:
      out << render_sweep_svg(points);
      break;
  }
  write_file(path, out.str());
}

}  // namespace wedge
