#include "wedge/plot.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wedge {

namespace {

constexpr double kWidth = 640.0;
constexpr int kSamplesPerArc = 48;

/// Maps data coordinates onto an SVG canvas with y pointing up.
struct Canvas {
  double x_min, x_max, y_min, y_max;
  double scale_x, scale_y;

  Canvas(double x0, double x1, double y0, double y1, double width, double height)
      : x_min(x0), x_max(x1), y_min(y0), y_max(y1), scale_x(width / (x1 - x0)), scale_y(height / (y1 - y0)) {}

  double px(double x) const { return (x - x_min) * scale_x; }
  double py(double y) const { return (y_max - y) * scale_y; }
  double width() const { return (x_max - x_min) * scale_x; }
  double height() const { return (y_max - y_min) * scale_y; }
};

std::string svg_open(double width, double height) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {:.3f} {:.3f}\" width=\"{:.3f}\" "
      "height=\"{:.3f}\">\n<rect x=\"0\" y=\"0\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"white\"/>\n",
      width, height, width, height, width, height);
}

}  // namespace

std::string render_trajectory_svg(const Trajectory& traj) {
  if (traj.events.empty()) {
    throw std::invalid_argument("cannot plot a trajectory without collisions");
  }
  const WedgeAngle& theta = traj.theta;
  const ConfigBounds box = config_bounds(traj.energy, theta);
  const Vec2 end_a = wall_point(Wall::A, box.x_tilde_max, theta);
  const Vec2 end_b = wall_point(Wall::B, box.y_tilde_max, theta);
  const Vec2 far = end_a + end_b;

  double x0 = std::min({0.0, end_a.x, end_b.x, far.x});
  double x1 = std::max({0.0, end_a.x, end_b.x, far.x});
  double y0 = std::min({0.0, end_a.y, end_b.y, far.y});
  double y1 = std::max({0.0, end_a.y, end_b.y, far.y});
  const double mx = 0.05 * (x1 - x0);
  const double my = 0.05 * (y1 - y0);
  x0 -= mx;
  x1 += mx;
  y0 -= my;
  y1 += my;
  const double k = kWidth / (x1 - x0);
  const Canvas c(x0, x1, y0, y1, kWidth, (y1 - y0) * k);

  std::string svg = svg_open(c.width(), c.height());
  svg += fmt::format("<title>theta = {:.6f} deg, E = {:.6f}, {} collisions</title>\n", theta.degrees(), traj.energy,
                     traj.events.size());
  svg += fmt::format(
      "<polyline class=\"wall\" points=\"{:.3f},{:.3f} {:.3f},{:.3f} {:.3f},{:.3f}\" fill=\"none\" "
      "stroke=\"black\" stroke-width=\"2\"/>\n",
      c.px(end_b.x), c.py(end_b.y), c.px(0.0), c.py(0.0), c.px(end_a.x), c.py(end_a.y));

  CartesianState from = traj.initial;
  for (const CollisionEvent& e : traj.events) {
    const double duration = e.t - from.t;
    std::string points;
    for (int i = 0; i <= kSamplesPerArc; ++i) {
      const CartesianState s = free_flight(from, duration * i / kSamplesPerArc);
      points += fmt::format("{}{:.3f},{:.3f}", i == 0 ? "" : " ", c.px(s.x), c.py(s.y));
    }
    svg += fmt::format("<polyline class=\"arc\" points=\"{}\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1\"/>\n",
                       points);
    from = e.post;
  }
  svg += fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"14\" text-anchor=\"middle\">x</text>\n",
                     c.width() / 2, c.height() - 4.0);
  svg += fmt::format("<text x=\"12\" y=\"{:.3f}\" font-size=\"14\">y</text>\n", c.height() / 2);
  svg += "</svg>\n";
  return svg;
}

std::string render_sweep_svg(std::span<const PeriodicPoint> points) {
  if (points.empty()) {
    throw std::invalid_argument("cannot plot an empty sweep");
  }
  double u0 = points.front().u_bar;
  double u1 = u0;
  for (const PeriodicPoint& p : points) {
    u0 = std::min(u0, p.u_bar);
    u1 = std::max(u1, p.u_bar);
  }
  if (u1 - u0 < 1e-12) {
    u0 -= 1.0;
    u1 += 1.0;
  }
  const double mu = 0.05 * (u1 - u0);
  const Canvas c(-4.5, 94.5, u0 - mu, u1 + mu, kWidth, 0.75 * kWidth);

  std::string svg = svg_open(c.width(), c.height());
  svg += fmt::format(
      "<line class=\"axis\" x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"gray\"/>\n", c.px(0.0),
      c.py(0.0), c.px(90.0), c.py(0.0));
  svg += fmt::format(
      "<line class=\"axis\" x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"gray\"/>\n", c.px(0.0),
      c.py(u0 - mu), c.px(0.0), c.py(u1 + mu));
  for (const PeriodicPoint& p : points) {
    svg += fmt::format("<circle class=\"point\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"2\" fill=\"#a8321f\"/>\n",
                       c.px(p.theta * 180.0 / std::numbers::pi), c.py(p.u_bar));
  }
  svg += fmt::format(
      "<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"14\" text-anchor=\"middle\">theta (deg)</text>\n",
      c.width() / 2, c.height() - 4.0);
  svg += fmt::format("<text x=\"4\" y=\"16\" font-size=\"14\">u_bar</text>\n");
  svg += "</svg>\n";
  return svg;
}

}  // namespace wedge
