#include "spiralbox/fdsolver.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>

namespace spiralbox::fd {

namespace {

// Bisects for the k-th smallest eigenvalue (0-based) inside [lo, hi].
double bisect_eigenvalue(const TridiagonalOperator& op, int k, double lo,
                         double hi, double tolerance) {
  for (int iter = 0; iter < 256 && hi - lo > tolerance; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(op, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TridiagonalOperator discretize(const Potential& w, double length, int n_interior) {
  if (n_interior < 1) throw std::invalid_argument("discretize: need at least one interior node");
  if (!(length > 0.0)) throw std::invalid_argument("discretize: length must be positive");
  TridiagonalOperator op;
  op.length = length;
  op.grid_step = length / (n_interior + 1);
  const double h = op.grid_step;
  const double inv_h2 = 1.0 / (h * h);
  op.diagonal.resize(static_cast<std::size_t>(n_interior));
  op.off_diagonal.assign(static_cast<std::size_t>(n_interior - 1), -inv_h2);
  for (int i = 0; i < n_interior; ++i) {
    const double s = (i + 1) * h;
    const double value = w(s);
    if (!std::isfinite(value)) {
      throw std::domain_error("discretize: potential not finite at s = " + std::to_string(s));
    }
    op.diagonal[static_cast<std::size_t>(i)] = 2.0 * inv_h2 + value;
  }
  return op;
}

int sturm_count(const TridiagonalOperator& op, double shift) {
  const auto& d = op.diagonal;
  const auto& e = op.off_diagonal;
  constexpr double kTiny = std::numeric_limits<double>::min();
  int count = 0;
  double pivot = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double coupling = i == 0 ? 0.0 : e[i - 1] * e[i - 1] / pivot;
    pivot = d[i] - shift - coupling;
    if (pivot == 0.0) pivot = -kTiny;
    if (pivot < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> gershgorin_bounds(const TridiagonalOperator& op) {
  const auto& d = op.diagonal;
  const auto& e = op.off_diagonal;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::fabs(e[i - 1]);
    if (i + 1 < d.size()) radius += std::fabs(e[i]);
    lo = std::min(lo, d[i] - radius);
    hi = std::max(hi, d[i] + radius);
  }
  return {lo, hi};
}

std::vector<double> eigenvalues_lowest(const TridiagonalOperator& op, int count,
                                       Execution execution) {
  if (count < 0 || static_cast<std::size_t>(count) > op.dimension()) {
    throw std::invalid_argument("eigenvalues_lowest: count exceeds matrix dimension");
  }
  const auto [lo, hi] = gershgorin_bounds(op);
  const double scale = std::max(std::fabs(lo), std::fabs(hi));
  const double tolerance = 8.0 * std::numeric_limits<double>::epsilon() * scale;

  std::vector<double> values(static_cast<std::size_t>(count));
  if (execution == Execution::parallel && count > 1) {
    std::vector<std::future<double>> pending;
    pending.reserve(values.size());
    for (int k = 0; k < count; ++k) {
      pending.push_back(std::async(std::launch::async, bisect_eigenvalue,
                                   std::cref(op), k, lo, hi, tolerance));
    }
    for (int k = 0; k < count; ++k) values[static_cast<std::size_t>(k)] = pending[k].get();
  } else {
    for (int k = 0; k < count; ++k) {
      values[static_cast<std::size_t>(k)] = bisect_eigenvalue(op, k, lo, hi, tolerance);
    }
  }
  return values;
}

std::vector<double> richardson_refine(const Potential& w, double length,
                                      int count, int n_coarse,
                                      Execution execution) {
  const TridiagonalOperator coarse = discretize(w, length, n_coarse);
  const TridiagonalOperator fine = discretize(w, length, 2 * n_coarse);
  const auto eps_coarse = eigenvalues_lowest(coarse, count, execution);
  const auto eps_fine = eigenvalues_lowest(fine, count, execution);
  const double hc2 = coarse.grid_step * coarse.grid_step;
  const double hf2 = fine.grid_step * fine.grid_step;
  std::vector<double> refined(eps_coarse.size());
  for (std::size_t i = 0; i < refined.size(); ++i) {
    refined[i] = (hc2 * eps_fine[i] - hf2 * eps_coarse[i]) / (hc2 - hf2);
  }
  return refined;
}

Potential inverse_square_potential(double omega) {
  const double strength = omega * omega - 0.25;
  return [strength](double s) { return strength / (s * s); };
}

Potential literal_polyene_potential(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("literal_polyene_potential: sigma must be positive");
  const double strength = -1.0 / (4.0 * sigma * sigma);
  return [strength](double s) { return strength / (s * s); };
}

}  // namespace spiralbox::fd
