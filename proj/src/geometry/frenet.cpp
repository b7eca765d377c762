#include "spiralbox/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spiralbox::geometry {

namespace {

struct State {
  Vec2 position;
  Vec2 tangent;
  Vec2 normal;
};

struct Derivative {
  Vec2 d_position;
  Vec2 d_tangent;
  Vec2 d_normal;
};

double checked(const std::function<double(double)>& k, double s) {
  const double value = k(s);
  if (!std::isfinite(value)) {
    throw std::domain_error("frenet_integrate: curvature is not finite at s = " +
                            std::to_string(s));
  }
  return value;
}

Derivative rhs(const State& y, double kappa) {
  return {y.tangent, kappa * y.normal, -kappa * y.tangent};
}

State advance(const State& y, const Derivative& d, double h) {
  return {y.position + h * d.d_position, y.tangent + h * d.d_tangent,
          y.normal + h * d.d_normal};
}

State rk4_step(const std::function<double(double)>& k, const State& y,
               double s, double h, double orientation) {
  const double k0 = checked(k, s);
  const double k_mid = checked(k, s + 0.5 * h);
  const double k1 = checked(k, s + h);
  const Derivative a = rhs(y, k0);
  const Derivative b = rhs(advance(y, a, 0.5 * h), k_mid);
  const Derivative c = rhs(advance(y, b, 0.5 * h), k_mid);
  const Derivative d = rhs(advance(y, c, h), k1);
  const double w = h / 6.0;
  State next{
      y.position + w * (a.d_position + 2.0 * b.d_position + 2.0 * c.d_position + d.d_position),
      y.tangent + w * (a.d_tangent + 2.0 * b.d_tangent + 2.0 * c.d_tangent + d.d_tangent),
      {}};
  next.tangent = (1.0 / norm(next.tangent)) * next.tangent;
  next.normal = orientation * perp(next.tangent);
  return next;
}

}  // namespace

PlaneCurveSamples frenet_integrate(const std::function<double(double)>& k,
                                   const FrenetState& initial, double s1,
                                   int steps) {
  const double s0 = initial.s;
  if (!(s0 < s1)) throw std::invalid_argument("frenet_integrate: need s0 < s1");
  if (steps < 1) throw std::invalid_argument("frenet_integrate: steps must be >= 1");
  const double t_len = norm(initial.tangent);
  if (!(t_len > 0.0)) throw std::invalid_argument("frenet_integrate: zero tangent");

  State y{initial.position, (1.0 / t_len) * initial.tangent, {}};
  const double orientation = cross(initial.tangent, initial.normal) < 0.0 ? -1.0 : 1.0;
  y.normal = orientation * perp(y.tangent);

  PlaneCurveSamples out;
  out.start_s = s0;
  out.center = initial.position;
  out.s_values.reserve(static_cast<std::size_t>(steps) + 1);
  out.points.reserve(static_cast<std::size_t>(steps) + 1);
  out.tangents.reserve(static_cast<std::size_t>(steps) + 1);
  out.s_values.push_back(s0);
  out.points.push_back(y.position);
  out.tangents.push_back(y.tangent);

  const double ds = (s1 - s0) / steps;
  for (int i = 0; i < steps; ++i) {
    const double a = s0 + i * ds;
    const double b = (i + 1 == steps) ? s1 : s0 + (i + 1) * ds;
    const double k_max = std::max({std::fabs(checked(k, a)),
                                   std::fabs(checked(k, 0.5 * (a + b))),
                                   std::fabs(checked(k, b))});
    const int sub = std::max(1, static_cast<int>(std::ceil(k_max * (b - a) / 0.1)));
    const double h = (b - a) / sub;
    for (int j = 0; j < sub; ++j) {
      y = rk4_step(k, y, a + j * h, h, orientation);
    }
    out.s_values.push_back(b);
    out.points.push_back(y.position);
    out.tangents.push_back(y.tangent);
  }
  return out;
}

}  // namespace spiralbox::geometry
