#pragma once

// Plane curves with power-law curvature k(s) = 1 / (sigma s^p).
//
// Closed forms are provided for p = 1/2 (the hydrogen curve) and p = 1 (the
// polyene curve); any other curvature function goes through the Frenet
// integrator. All curves are arc-length parametrized and only defined for
// s > 0 unless the curvature stays finite at the origin.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace spiralbox::geometry {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
/// Counter-clockwise quarter turn.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

class CurvatureLaw {
 public:
  /// Throws std::invalid_argument unless sigma > 0 and p is finite.
  CurvatureLaw(double sigma, double p);

  double sigma() const { return sigma_; }
  double p() const { return p_; }

  /// k(s) = 1 / (sigma s^p).
  double curvature(double s) const;
  /// Tangent angle theta(s) with theta' = k:
  /// s^(1-p) / (sigma (1-p)) for p != 1 and ln(s) / sigma for p = 1.
  double turning_angle(double s) const;

 private:
  double sigma_;
  double p_;
};

struct FrenetState {
  double s = 0.0;
  Vec2 position;
  Vec2 tangent{1.0, 0.0};
  Vec2 normal{0.0, 1.0};
};

struct PlaneCurveSamples {
  std::vector<double> s_values;
  std::vector<Vec2> points;
  std::vector<Vec2> tangents;  // empty when the sampler has no tangent
  double start_s = 1.0;
  Vec2 center;
};

/// (C_p(s), S_p(s)) = (cos theta(s), sin theta(s)). Throws for s <= 0.
std::pair<double, double> cs_functions(const CurvatureLaw& law, double s);

/// Hydrogen curve (p = 1/2) with t(s0) = (1, 0), n(s0) = (0, 1):
///   R(s0) [[sigma^2/2, sigma sqrt(s)], [-sigma sqrt(s), sigma^2/2]] (C, S)^T + center,
/// where R(s0) = [[C(s0), S(s0)], [-S(s0), C(s0)]].
/// Its distance from the center is sigma sqrt(s + sigma^2 / 4).
Vec2 hydrogen_curve(double sigma, double s, double s0 = 1.0, Vec2 center = {});

/// Polyene curve (p = 1). With s0 = 1 and center = 0 this is
///   sigma s / (1 + sigma^2) (cos u + sigma sin u, sin u - sigma cos u),  u = ln(s) / sigma;
/// other s0 rotate that curve by R(s0) as for the hydrogen curve.
/// Its distance from the center is sigma s / sqrt(1 + sigma^2).
Vec2 polyene_curve(double sigma, double s, double s0 = 1.0, Vec2 center = {});

/// Exact Frenet frame of hydrogen_curve / polyene_curve at s.
FrenetState hydrogen_frame(double sigma, double s, double s0 = 1.0,
                           Vec2 center = {});
FrenetState polyene_frame(double sigma, double s, double s0 = 1.0,
                          Vec2 center = {});

/// Integrates t' = k n, n' = -k t, alpha' = t from initial.s to s1 with
/// classical RK4. The result holds steps + 1 uniformly spaced samples; each
/// output interval is sub-stepped so that k * ds <= 0.1. The tangent is
/// renormalized after every step and the normal rebuilt from it, keeping the
/// orientation of the initial frame.
/// Throws std::invalid_argument on bad ranges and std::domain_error when k
/// is not finite somewhere along the way.
PlaneCurveSamples frenet_integrate(const std::function<double(double)>& k,
                                   const FrenetState& initial, double s1,
                                   int steps);

/// Curvature |a' x a''| / |a'|^3 from central differences at the interior
/// nodes of uniformly spaced samples. Needs at least 3 samples.
std::vector<double> curvature_of_samples(const PlaneCurveSamples& samples);

double polyline_length(const PlaneCurveSamples& samples);

enum class Spacing { uniform, logarithmic };

/// Samples `curve` at `count` arc-length values in [s_min, s_max].
PlaneCurveSamples sample_curve(const std::function<Vec2(double)>& curve,
                               double s_min, double s_max, int count,
                               Spacing spacing);

/// Orientation-preserving rigid motion x -> R(angle) x + translation.
struct RigidMotion {
  double angle = 0.0;
  Vec2 translation;

  Vec2 apply_point(Vec2 p) const;
  Vec2 apply_vector(Vec2 v) const;

  /// The motion carrying frame `from` onto frame `to` (position and tangent).
  static RigidMotion aligning(const FrenetState& from, const FrenetState& to);
};

PlaneCurveSamples transform(const PlaneCurveSamples& samples,
                            const RigidMotion& motion);

}  // namespace spiralbox::geometry
