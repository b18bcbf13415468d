#include "wedge/cli.hpp"

#include <fmt/format.h>

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wedge/collision_maps.hpp"
#include "wedge/dynamics.hpp"
#include "wedge/io.hpp"
#include "wedge/orbits.hpp"

namespace wedge::cli {

namespace {

struct AngleOptions {
  std::optional<double> theta_deg;
  std::optional<int> p;
  std::optional<int> q;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--theta-deg", theta_deg, "Wedge rotation from the vertical, in degrees");
    cmd.add_option("--p", p, "Numerator of tan(theta) (with --q)");
    cmd.add_option("--q", q, "Denominator of tan(theta) (with --p)");
  }

  WedgeAngle resolve() const {
    const bool has_pq = p.has_value() || q.has_value();
    if (theta_deg.has_value() == has_pq) {
      throw std::invalid_argument("give exactly one of --theta-deg or --p/--q");
    }
    if (theta_deg) {
      return WedgeAngle::from_degrees(*theta_deg);
    }
    if (!p || !q) {
      throw std::invalid_argument("--p and --q must be given together");
    }
    return critical_angle({*p, *q, 1.0});
  }
};

struct LaunchOptions {
  std::string wall = "A";
  std::optional<double> s;
  double u_bar = 0.0;
  double w_bar = 1.0;
  std::optional<double> x, y, u, w;
  std::optional<double> energy;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--wall", wall, "Launch wall (A or B)")->check(CLI::IsMember({"A", "B"}));
    cmd.add_option("--s", s, "Launch arclength along the wall");
    cmd.add_option("--u-bar", u_bar, "Launch momentum along the wall, away from the vertex");
    cmd.add_option("--w-bar", w_bar, "Launch momentum along the inward wall normal");
    cmd.add_option("--x", x, "Cartesian launch x (with --y, --u, --w)");
    cmd.add_option("--y", y, "Cartesian launch y");
    cmd.add_option("--u", u, "Cartesian launch momentum, horizontal");
    cmd.add_option("--w", w, "Cartesian launch momentum, vertical");
    cmd.add_option("--energy", energy, "Energy; places a wall launch at the matching arclength");
  }

  CartesianState resolve(const WedgeAngle& theta) const {
    const bool cartesian = x || y || u || w;
    if (cartesian) {
      if (!(x && y && u && w)) {
        throw std::invalid_argument("Cartesian launch needs all of --x, --y, --u, --w");
      }
      if (s || energy) {
        throw std::invalid_argument("--s/--energy apply only to wall-relative launches");
      }
      return {*x, *y, *u, *w, 0.0};
    }
    const Wall launch_wall = wall == "A" ? Wall::A : Wall::B;
    if (s && energy) {
      throw std::invalid_argument("give at most one of --s and --energy");
    }
    const double arclength = energy ? launch_arclength(launch_wall, u_bar, w_bar, *energy, theta) : s.value_or(1.0);
    return launch_from_wall(launch_wall, arclength, u_bar, w_bar, theta);
  }
};

struct OutputOptions {
  std::string path;
  std::string format;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--out", path, "Output file (csv, json or svg)");
    cmd.add_option("--format", format, "Output format; defaults to the file extension")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
  }

  Format resolve() const {
    if (!format.empty()) return parse_format(format);
    return format_from_path(path);
  }
};

std::string summary(const Trajectory& traj) {
  return fmt::format("theta_deg={} E={} collisions={} termination={}\n", format_double(traj.theta.degrees()),
                     format_double(traj.energy), traj.events.size(), to_string(traj.termination));
}

int emit_trajectory(const Trajectory& traj, const OutputOptions& output, std::size_t required, std::ostream& out) {
  if (output.path.empty()) {
    write_csv(traj, out);
  } else {
    export_trajectory(traj, output.resolve(), output.path);
    out << summary(traj);
  }
  return traj.events.size() < required ? kTerminatedEarly : kOk;
}

/// Writes text to --out when given, otherwise to stdout.
void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotated orthogonal gravitational wedge billiard"};
  app.name("wedge");
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run the event-driven simulation");
  AngleOptions sim_angle;
  LaunchOptions sim_launch;
  OutputOptions sim_out;
  std::size_t sim_n = 50;
  sim_angle.add_to(*sim);
  sim_launch.add_to(*sim);
  sim_out.add_to(*sim);
  sim->add_option("--n", sim_n, "Number of collisions");

  // periodic
  auto* per = app.add_subcommand("periodic", "Build the periodic orbit for coprime (p, q)");
  int per_p = 1;
  int per_q = 1;
  double per_energy = 1.0;
  std::size_t per_periods = 1;
  OutputOptions per_out;
  per->add_option("--p", per_p, "Collisions on wall A per period")->required();
  per->add_option("--q", per_q, "Collisions on wall B per period")->required();
  per->add_option("--energy", per_energy, "Energy");
  per->add_option("--periods", per_periods, "Number of periods to simulate");
  per_out.add_to(*per);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Periodic launch points (theta*, u*) over coprime pairs");
  int sweep_max = 25;
  std::optional<int> sweep_p_max;
  std::optional<int> sweep_q_max;
  double sweep_energy = 1.0;
  bool sweep_half = false;
  OutputOptions sweep_out;
  sweep->add_option("--max", sweep_max, "Upper limit for both p and q");
  sweep->add_option("--p-max", sweep_p_max, "Upper limit for p");
  sweep->add_option("--q-max", sweep_q_max, "Upper limit for q");
  sweep->add_option("--energy", sweep_energy, "Energy");
  sweep->add_flag("--half", sweep_half, "Only q > p, plus (1, 1)");
  sweep_out.add_to(*sweep);

  // classify
  auto* cls = app.add_subcommand("classify", "Classify a trajectory as periodic, dense or sliding");
  AngleOptions cls_angle;
  LaunchOptions cls_launch;
  std::size_t cls_n = 10000;
  double cls_tol = kPeriodicityTolerance;
  std::string cls_out;
  cls_angle.add_to(*cls);
  cls_launch.add_to(*cls);
  cls->add_option("--n", cls_n, "Number of collisions");
  cls->add_option("--tol", cls_tol, "Recurrence tolerance");
  cls->add_option("--out", cls_out, "Write the result to a file");

  // fixed-points
  auto* fp = app.add_subcommand("fixed-points", "Fixed points of the cross-wall maps");
  double fp_theta = 45.0;
  double fp_energy = 1.0;
  std::string fp_out;
  fp->add_option("--theta-deg", fp_theta, "Wedge rotation in degrees")->required();
  fp->add_option("--energy", fp_energy, "Energy");
  fp->add_option("--out", fp_out, "Write the result to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  try {
    if (sim->parsed()) {
      const WedgeAngle theta = sim_angle.resolve();
      const Trajectory traj = simulate(sim_launch.resolve(theta), theta, sim_n);
      return emit_trajectory(traj, sim_out, sim_n, out);
    }
    if (per->parsed()) {
      const OrbitSpec spec{per_p, per_q, per_energy};
      const Trajectory traj = build_periodic_orbit(spec, per_periods);
      const int code = emit_trajectory(traj, per_out, per_periods * static_cast<std::size_t>(per_p + per_q), out);
      if (!per_out.path.empty() && traj.events.size() >= 2) {
        out << "class: " << describe(classify_orbit(traj)) << '\n';
      }
      return code;
    }
    if (sweep->parsed()) {
      const auto points = sweep_periodic_points(sweep_p_max.value_or(sweep_max), sweep_q_max.value_or(sweep_max),
                                                sweep_energy, sweep_half);
      if (sweep_out.path.empty()) {
        write_sweep_csv(points, out);
      } else {
        export_sweep(points, sweep_energy, sweep_out.resolve(), sweep_out.path);
        out << "points=" << points.size() << '\n';
      }
      return kOk;
    }
    if (cls->parsed()) {
      const WedgeAngle theta = cls_angle.resolve();
      const Trajectory traj = simulate(cls_launch.resolve(theta), theta, cls_n);
      const OrbitClass c = classify_orbit(traj, cls_tol);
      emit_text(fmt::format("{}class: {}\n", summary(traj), describe(c)), cls_out, out);
      return kOk;
    }
    if (fp->parsed()) {
      const WedgeAngle theta = WedgeAngle::from_degrees(fp_theta);
      const MapState fb = fixed_point(MapId::FB, fp_energy, theta);
      const MapState gb = fixed_point(MapId::GB, fp_energy, theta);
      emit_text(fmt::format("theta_deg={} E={}\nFB u_bar={} w_bar={}\nGB u_bar={} w_bar={}\n"
                            "period1_reflection_possible={}\n",
                            format_double(fp_theta), format_double(fp_energy), format_double(fb.u_bar),
                            format_double(fb.w_bar), format_double(gb.u_bar), format_double(gb.w_bar),
                            reflection_period1_possible(theta) ? "true" : "false"),
                fp_out, out);
      return kOk;
    }
  } catch (const IoError& e) {
    err << "wedge: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "wedge: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const std::domain_error& e) {
    err << "wedge: " << e.what() << '\n';
    return kInvalidArguments;
  }
  return kInvalidArguments;
}

}  // namespace wedge::cli
