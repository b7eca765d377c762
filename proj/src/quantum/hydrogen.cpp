#include <cmath>
#include <stdexcept>

#include "spiralbox/quantum.hpp"
#include "spiralbox/specfun.hpp"

namespace spiralbox::quantum {

namespace {

double unnormalized_1d(int n, double a0, double s) {
  const double z = 2.0 * s / (n * a0);
  return std::exp(-0.5 * z) * z * specfun::laguerre(n - 1, 1.0, z);
}

}  // namespace

HydrogenState1D make_hydrogen_state(int n, double a0) {
  if (n < 1) throw std::invalid_argument("make_hydrogen_state: N must be >= 1");
  if (!(a0 > 0.0)) throw std::invalid_argument("make_hydrogen_state: a0 must be positive");
  const auto density = [n, a0](double s) {
    const double psi = unnormalized_1d(n, a0, s);
    return psi * psi;
  };
  const auto integral =
      specfun::integrate(density, 0.0, 50.0 * n * a0, {1e-15, 1e-13, 200000});
  if (!integral.converged) {
    throw std::runtime_error("make_hydrogen_state: normalization did not converge");
  }
  return {n, a0, 1.0 / std::sqrt(integral.value)};
}

double hydrogen_wavefunction_1d(const HydrogenState1D& state, double s) {
  if (!(s > 0.0)) {
    throw std::domain_error("hydrogen_wavefunction_1d: s must be positive");
  }
  return state.normalization * unnormalized_1d(state.n, state.a0, s);
}

double hydrogen_radial_3d(int n, int ell, double r, double a0) {
  if (n < 1 || ell < 0 || ell >= n) {
    throw std::invalid_argument("hydrogen_radial_3d: need 0 <= l < N");
  }
  if (!(r >= 0.0)) throw std::domain_error("hydrogen_radial_3d: r must be >= 0");
  const double k = 2.0 / (n * a0);
  // (N-l-1)! / (2N (N+l)!)
  const double log_ratio = specfun::log_gamma(n - ell) - specfun::log_gamma(n + ell + 1.0);
  const double norm = std::sqrt(k * k * k * std::exp(log_ratio) / (2.0 * n));
  const double z = k * r;
  return norm * std::exp(-0.5 * z) * std::pow(z, ell) *
         specfun::laguerre(n - ell - 1, 2.0 * ell + 1.0, z);
}

}  // namespace spiralbox::quantum
