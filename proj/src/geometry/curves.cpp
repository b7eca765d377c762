#include "spiralbox/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spiralbox::geometry {

namespace {

void require_positive_s(double s, const char* who) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::domain_error(std::string(who) + ": arc length must be positive");
  }
}

void require_positive_sigma(double sigma, const char* who) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument(std::string(who) + ": sigma must be positive");
  }
}

// R(s0) = [[C, S], [-S, C]], a rotation by -theta(s0).
Vec2 rotate_back(double c0, double s0, Vec2 v) {
  return {c0 * v.x + s0 * v.y, -s0 * v.x + c0 * v.y};
}

Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

CurvatureLaw::CurvatureLaw(double sigma, double p) : sigma_(sigma), p_(p) {
  require_positive_sigma(sigma, "CurvatureLaw");
  if (!std::isfinite(p)) throw std::invalid_argument("CurvatureLaw: p must be finite");
}

double CurvatureLaw::curvature(double s) const {
  return 1.0 / (sigma_ * std::pow(s, p_));
}

double CurvatureLaw::turning_angle(double s) const {
  if (p_ == 1.0) return std::log(s) / sigma_;
  return std::pow(s, 1.0 - p_) / (sigma_ * (1.0 - p_));
}

std::pair<double, double> cs_functions(const CurvatureLaw& law, double s) {
  require_positive_s(s, "cs_functions");
  const double theta = law.turning_angle(s);
  return {std::cos(theta), std::sin(theta)};
}

Vec2 hydrogen_curve(double sigma, double s, double s0, Vec2 center) {
  require_positive_sigma(sigma, "hydrogen_curve");
  require_positive_s(s, "hydrogen_curve");
  require_positive_s(s0, "hydrogen_curve");
  const CurvatureLaw law(sigma, 0.5);
  const auto [c, sn] = cs_functions(law, s);
  const auto [c0, sn0] = cs_functions(law, s0);
  const double a = 0.5 * sigma * sigma;
  const double b = sigma * std::sqrt(s);
  const Vec2 local{a * c + b * sn, -b * c + a * sn};
  return rotate_back(c0, sn0, local) + center;
}

Vec2 polyene_curve(double sigma, double s, double s0, Vec2 center) {
  require_positive_sigma(sigma, "polyene_curve");
  require_positive_s(s, "polyene_curve");
  require_positive_s(s0, "polyene_curve");
  const CurvatureLaw law(sigma, 1.0);
  const auto [c, sn] = cs_functions(law, s);
  const auto [c0, sn0] = cs_functions(law, s0);
  const double scale = sigma * s / (1.0 + sigma * sigma);
  const Vec2 local{scale * (c + sigma * sn), scale * (sn - sigma * c)};
  return rotate_back(c0, sn0, local) + center;
}

FrenetState hydrogen_frame(double sigma, double s, double s0, Vec2 center) {
  const CurvatureLaw law(sigma, 0.5);
  FrenetState state;
  state.s = s;
  state.position = hydrogen_curve(sigma, s, s0, center);
  state.tangent = unit(law.turning_angle(s) - law.turning_angle(s0));
  state.normal = perp(state.tangent);
  return state;
}

FrenetState polyene_frame(double sigma, double s, double s0, Vec2 center) {
  const CurvatureLaw law(sigma, 1.0);
  // The closed form leaves s0 heading at angle atan2(1 - sigma^2, 2 sigma).
  const double heading = std::atan2(1.0 - sigma * sigma, 2.0 * sigma);
  FrenetState state;
  state.s = s;
  state.position = polyene_curve(sigma, s, s0, center);
  state.tangent =
      unit(law.turning_angle(s) - law.turning_angle(s0) + heading);
  state.normal = perp(state.tangent);
  return state;
}

PlaneCurveSamples sample_curve(const std::function<Vec2(double)>& curve,
                               double s_min, double s_max, int count,
                               Spacing spacing) {
  if (count < 2) throw std::invalid_argument("sample_curve: need at least 2 samples");
  if (!(s_min < s_max)) throw std::invalid_argument("sample_curve: need s_min < s_max");
  if (spacing == Spacing::logarithmic && !(s_min > 0.0)) {
    throw std::invalid_argument("sample_curve: log spacing needs s_min > 0");
  }
  PlaneCurveSamples out;
  out.start_s = s_min;
  out.s_values.reserve(static_cast<std::size_t>(count));
  out.points.reserve(static_cast<std::size_t>(count));
  const double log_min = spacing == Spacing::logarithmic ? std::log(s_min) : 0.0;
  const double log_max = spacing == Spacing::logarithmic ? std::log(s_max) : 0.0;
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    double s = 0.0;
    if (i == 0) {
      s = s_min;
    } else if (i == count - 1) {
      s = s_max;
    } else if (spacing == Spacing::uniform) {
      s = s_min + t * (s_max - s_min);
    } else {
      s = std::exp(log_min + t * (log_max - log_min));
    }
    out.s_values.push_back(s);
    out.points.push_back(curve(s));
  }
  return out;
}

double polyline_length(const PlaneCurveSamples& samples) {
  double length = 0.0;
  for (std::size_t i = 1; i < samples.points.size(); ++i) {
    length += norm(samples.points[i] - samples.points[i - 1]);
  }
  return length;
}

std::vector<double> curvature_of_samples(const PlaneCurveSamples& samples) {
  const auto& pts = samples.points;
  if (pts.size() < 3 || samples.s_values.size() != pts.size()) {
    throw std::invalid_argument("curvature_of_samples: need at least 3 samples");
  }
  const double h = (samples.s_values.back() - samples.s_values.front()) /
                   static_cast<double>(pts.size() - 1);
  std::vector<double> k;
  k.reserve(pts.size() - 2);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const Vec2 d1 = (0.5 / h) * (pts[i + 1] - pts[i - 1]);
    const Vec2 d2 = (1.0 / (h * h)) * (pts[i + 1] - 2.0 * pts[i] + pts[i - 1]);
    const double speed = norm(d1);
    k.push_back(std::fabs(cross(d1, d2)) / (speed * speed * speed));
  }
  return k;
}

Vec2 RigidMotion::apply_vector(Vec2 v) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Vec2 RigidMotion::apply_point(Vec2 p) const {
  return apply_vector(p) + translation;
}

RigidMotion RigidMotion::aligning(const FrenetState& from, const FrenetState& to) {
  RigidMotion motion;
  motion.angle = std::atan2(to.tangent.y, to.tangent.x) -
                 std::atan2(from.tangent.y, from.tangent.x);
  motion.translation = to.position - motion.apply_vector(from.position);
  return motion;
}

PlaneCurveSamples transform(const PlaneCurveSamples& samples,
                            const RigidMotion& motion) {
  PlaneCurveSamples out = samples;
  for (auto& p : out.points) p = motion.apply_point(p);
  for (auto& t : out.tangents) t = motion.apply_vector(t);
  out.center = motion.apply_point(samples.center);
  return out;
}

}  // namespace spiralbox::geometry
