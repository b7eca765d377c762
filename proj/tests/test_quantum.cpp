#include <algorithm>
#include <cmath>
#include <numbers>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "spiralbox/quantum.hpp"
#include "spiralbox/specfun.hpp"

using namespace spiralbox;
using namespace spiralbox::quantum;
using doctest::Approx;
constexpr double pi = std::numbers::pi;

namespace {

double l2_overlap(const SpiralBoxSpectrum& sp, int m, int n) {
  const auto r = specfun::integrate(
      [&](double s) { return spiral_box_wavefunction(sp, m, s) * spiral_box_wavefunction(sp, n, s); },
      0.0, sp.box_length(), {1e-12, 1e-11, 200000});
  return r.value;
}

// tabulated sigma^2 and the printed omega
struct Row {
  double sigma2, omega;
};
constexpr Row kTable[] = {{0.004, 7.88987}, {0.0014, 13.35370}, {0.0009, 16.65920},
                          {0.00045, 23.56490}};

}  // namespace

TEST_CASE("geometry-induced potential") {
  CHECK(geometry_induced_potential(0.0, 1.0) == 0.0);
  const double sigma = 0.7, s = 2.3, m = 1.5;
  CHECK(geometry_induced_potential(1.0 / (sigma * std::sqrt(s)), m) ==
        Approx(-1.0 / (8 * m * sigma * sigma * s)).epsilon(1e-14));
  CHECK(geometry_induced_potential(1.0 / (sigma * s), m) ==
        Approx(-1.0 / (8 * m * sigma * sigma * s * s)).epsilon(1e-14));
  for (double k : {-3.0, 0.1, 50.0}) CHECK(geometry_induced_potential(k, 2.0) <= 0.0);
  CHECK_THROWS_AS(geometry_induced_potential(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("omega from sigma reproduces the published table") {
  for (const auto& row : kTable) {
    const double omega = omega_from_sigma(std::sqrt(row.sigma2));
    // five significant figures; the printed sixth digit is off for two rows
    char got[32];
    char want[32];
    std::snprintf(got, sizeof got, "%.4e", omega);
    std::snprintf(want, sizeof want, "%.4e", row.omega);
    CHECK(std::string(got) == std::string(want));
    CHECK(std::fabs(omega - row.omega) / row.omega <= 3e-6);
  }
  CHECK(omega_from_sigma(1.0) == 0.0);
  CHECK(omega_from_sigma(1e8) == Approx(0.5).epsilon(1e-15));
  CHECK(sigma_from_omega(omega_from_sigma(0.3)) == Approx(0.3).epsilon(1e-14));
}

TEST_CASE("spectrum reduces to the open box as sigma grows") {
  const double length = 3.0;
  const auto sp = spiral_box_spectrum(1e6, length, 1.0, 6);
  for (int n = 1; n <= 6; ++n) {
    const double ref = pib_open_energy(n, length, 1.0);
    CHECK(std::fabs(sp.energy(n) - ref) / ref < 1e-6);
    CHECK(sp.energy(n) == Approx(n * n * pi * pi / (2 * length * length)).epsilon(1e-6));
  }
}

TEST_CASE("spectrum values and monotonicity") {
  const auto sp = spiral_box_spectrum(std::sqrt(0.004), 1.0, 1.0, 10);
  const double j = specfun::bessel_j_zero(omega_from_sigma(std::sqrt(0.004)), 1);
  CHECK(sp.energy(1) == Approx(0.5 * j * j).epsilon(1e-14));
  for (int n = 2; n <= 10; ++n) CHECK(sp.energy(n) > sp.energy(n - 1));
  CHECK_THROWS_AS(sp.energy(0), std::out_of_range);
  CHECK_THROWS_AS(sp.energy(11), std::out_of_range);
  CHECK(spiral_box_spectrum(0.5, 1.0, 1.0, 0).levels() == 0);
  CHECK_THROWS_AS(spiral_box_spectrum(-0.5, 1.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(spiral_box_spectrum(0.5, 1.0, 0.0, 3), std::invalid_argument);
}

TEST_CASE("wavefunction boundary values") {
  for (const auto& row : kTable) {
    const auto sp = spiral_box_spectrum(std::sqrt(row.sigma2), 2.0, 1.0, 5);
    for (int n = 1; n <= 5; ++n) {
      CHECK(spiral_box_wavefunction(sp, n, 0.0) == 0.0);
      CHECK(std::fabs(spiral_box_wavefunction(sp, n, 2.0)) <= 1e-9);
    }
    CHECK_THROWS_AS(spiral_box_wavefunction(sp, 6, 1.0), std::out_of_range);
    CHECK_THROWS_AS(spiral_box_wavefunction(sp, 1, 2.5), std::domain_error);
  }
}

TEST_CASE("wavefunction normalization by adaptive quadrature") {
  for (double omega : {0.3, 0.5, 7.88987, 23.5649}) {
    const auto sp = spiral_box_spectrum_for_order(omega, 1.7, 1.0, 5);
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(omega);
      CAPTURE(n);
      CHECK(std::fabs(l2_overlap(sp, n, n) - 1.0) <= 1e-8);
    }
  }
}

TEST_CASE("normalization closure on a fine grid at each tabulated omega") {
  for (const auto& row : kTable) {
    const auto sp = spiral_box_spectrum(std::sqrt(row.sigma2), 1.0, 1.0, 8);
    for (int n = 1; n <= 8; ++n) {
      // Simpson sum on 20000 panels
      const double total = oracle::simpson(
          [&](double s) {
            const double psi = spiral_box_wavefunction(sp, n, s);
            return psi * psi;
          },
          0.0, 1.0, 20000);
      CAPTURE(n);
      CHECK(std::fabs(total - 1.0) <= 1e-6);
    }
  }
}

TEST_CASE("orthogonality") {
  for (double omega : {0.3, 7.88987}) {
    const auto sp = spiral_box_spectrum_for_order(omega, 1.0, 1.0, 5);
    for (int m = 1; m <= 5; ++m) {
      for (int n = 1; n <= 5; ++n) {
        CHECK(std::fabs(l2_overlap(sp, m, n) - (m == n ? 1.0 : 0.0)) <= 1e-6);
      }
    }
  }
}

TEST_CASE("normalization constant matches the single-Bessel form") {
  for (double omega : {0.3, 0.5, 1.0, 7.88987, 13.3537, 23.5649}) {
    const double length = 2.5;
    const auto sp = spiral_box_spectrum_for_order(omega, length, 1.0, 6);
    for (int n = 1; n <= 6; ++n) {
      const double upper = specfun::bessel_j(omega + 1.0, sp.zero(n));
      const double ref = std::sqrt(2.0) / (length * std::fabs(upper));
      CHECK(std::fabs(normalization_constant(sp, n) - ref) <= 1e-10 * ref);
    }
  }
}

TEST_CASE("half-order wavefunctions are the box sines") {
  const double length = 1.3;
  const auto sp = spiral_box_spectrum_for_order(0.5, length, 1.0, 4);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i <= 50; ++i) {
      const double s = length * i / 50.0;
      const double ref = std::sqrt(2.0 / length) * std::sin(n * pi * s / length);
      CHECK(std::fabs(spiral_box_wavefunction(sp, n, s) - ref) <= 1e-10);
    }
  }
}

TEST_CASE("peak amplitude depends on the level") {
  const auto sp = spiral_box_spectrum_for_order(7.88987, 1.0, 1.0, 5);
  std::vector<double> peaks;
  for (int n = 1; n <= 5; ++n) {
    double peak = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      peak = std::max(peak, std::fabs(spiral_box_wavefunction(sp, n, i / 20000.0)));
    }
    peaks.push_back(peak);
  }
  const auto [lo, hi] = std::minmax_element(peaks.begin(), peaks.end());
  CHECK(*hi - *lo > 1e-6);
}

TEST_CASE("particle in a box") {
  const double e1_ev = units::hartree_to_ev(pib_open_energy(1, units::nm_to_bohr(1.0), 1.0));
  CHECK(e1_ev == Approx(0.376).epsilon(1e-3));
  CHECK(e1_ev == Approx(0.37603016261534193637).epsilon(1e-9));
  for (int n : {1, 3, 7}) {
    for (double length : {0.5, 2.0, 9.0}) {
      for (double mass : {0.3, 1.0, 4.0}) {
        const double open = pib_open_energy(n, length, mass);
        CHECK(pib_open_energy(2 * n, length, mass) / open == Approx(4.0).epsilon(1e-15));
        CHECK(pib_closed_energy(n, length, mass) == 4.0 * open);
        CHECK(open == Approx(n * n * pi * pi / (2 * mass * length * length)).epsilon(1e-14));
        CHECK(pib_open_energy(n, 2 * length, mass) == Approx(open / 4).epsilon(1e-15));
      }
    }
  }
  CHECK(pib_closed_energy(1, 2 * pi, 1.0) == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("transition wavelengths") {
  struct OneHartree {
    double energy(int n) const { return static_cast<double>(n); }
  };
  CHECK(transition_wavelength_nm(OneHartree{}, 1) == Approx(45.563).epsilon(1e-5));
  CHECK(transition_wavelength_nm(OneHartree{}, 1) ==
        Approx(45.563352516919279344).epsilon(1e-10));

  const double length = units::nm_to_bohr(1.1);
  const PibLevels pib{length, 1.0, false};
  for (int n = 1; n <= 6; ++n) {
    // 8 m L^2 c / (h (2n + 1)) with c = 137.036 in atomic units
    const double lambda_au = 8 * length * length * (units::UnitSystem::hc_ev_nm /
                                                    units::UnitSystem::hartree_ev /
                                                    units::UnitSystem::bohr_nm) /
                             (4 * pi * pi * (2 * n + 1));
    CHECK(transition_wavelength_nm(pib, n) ==
          Approx(units::bohr_to_nm(lambda_au)).epsilon(1e-13));
    const auto half = spiral_box_spectrum_for_order(0.5, length, 1.0, n + 1);
    CHECK(transition_wavelength_nm(half, n) ==
          Approx(transition_wavelength_nm(pib, n)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(transition_wavelength_nm(pib, 0), std::invalid_argument);
  struct Flat {
    double energy(int) const { return 1.0; }
  };
  CHECK_THROWS_AS(transition_wavelength_nm(Flat{}, 1), std::domain_error);
}

TEST_CASE("one-dimensional hydrogen states") {
  for (int big_n = 1; big_n <= 4; ++big_n) {
    for (double a0 : {1.0, 0.6}) {
      const auto state = make_hydrogen_state(big_n, a0);
      CAPTURE(big_n);
      CHECK(state.normalization > 0.0);
      const double upper = 50.0 * big_n * a0;
      const double total = oracle::simpson(
          [&](double s) {
            if (s <= 0.0) return 0.0;
            const double psi = hydrogen_wavefunction_1d(state, s);
            return psi * psi;
          },
          0.0, upper, 200000);
      CHECK(std::fabs(total - 1.0) <= 1e-6);

      // nodes by sign scanning on (0, 40 N a0)
      int nodes = 0;
      double previous = hydrogen_wavefunction_1d(state, 1e-6);
      for (int i = 1; i <= 40000; ++i) {
        const double value = hydrogen_wavefunction_1d(state, 40.0 * big_n * a0 * i / 40000.0);
        if ((value < 0.0) != (previous < 0.0)) ++nodes;
        previous = value;
      }
      CHECK(nodes == big_n - 1);
    }
  }
  const auto ground = make_hydrogen_state(1);
  CHECK_THROWS_AS(hydrogen_wavefunction_1d(ground, 0.0), std::domain_error);
  CHECK_THROWS_AS(make_hydrogen_state(0), std::invalid_argument);
}

TEST_CASE("ground state has a single maximum at s = a0") {
  const auto state = make_hydrogen_state(1, 1.0);
  // psi ~ z exp(-z / 2) with z = 2 s peaks at s = 1
  CHECK(hydrogen_wavefunction_1d(state, 1.0) > hydrogen_wavefunction_1d(state, 0.99));
  CHECK(hydrogen_wavefunction_1d(state, 1.0) > hydrogen_wavefunction_1d(state, 1.01));
  // integral of 4 s^2 exp(-2 s) over (0, inf) is 1, so B = 1
  CHECK(state.normalization == Approx(1.0).epsilon(1e-8));
}

TEST_CASE("three-dimensional radial functions") {
  // R_10 = 2 exp(-r) with a0 = 1
  for (double r : {0.1, 1.0, 3.0}) CHECK(hydrogen_radial_3d(1, 0, r) == Approx(2 * std::exp(-r)));
  // R_21 = r exp(-r / 2) / (2 sqrt 6)
  CHECK(hydrogen_radial_3d(2, 1, 1.5) ==
        Approx(1.5 * std::exp(-0.75) / (2 * std::sqrt(6.0))).epsilon(1e-13));

  auto radial_integral = [](auto f) {
    return specfun::integrate(f, 0.0, 200.0, {1e-13, 1e-12, 200000}).value;
  };
  for (int big_n = 1; big_n <= 4; ++big_n) {
    for (int ell = 0; ell < big_n; ++ell) {
      CHECK(radial_integral([&](double r) {
              const double v = hydrogen_radial_3d(big_n, ell, r);
              return r * r * v * v;
            }) == Approx(1.0).epsilon(1e-9));
    }
  }
  CHECK(std::fabs(radial_integral([](double r) {
          return r * r * hydrogen_radial_3d(1, 0, r) * hydrogen_radial_3d(2, 0, r);
        })) <= 1e-6);
  CHECK_THROWS_AS(hydrogen_radial_3d(2, 2, 1.0), std::invalid_argument);
}

TEST_CASE("one-dimensional and radial densities coincide") {
  for (int big_n = 1; big_n <= 4; ++big_n) {
    const auto state = make_hydrogen_state(big_n);
    for (int i = 1; i <= 100; ++i) {
      const double s = 0.2 * i * big_n;
      const double psi = hydrogen_wavefunction_1d(state, s);
      const double radial = hydrogen_radial_3d(big_n, 0, s);
      const double d1 = psi * psi;
      const double d3 = s * s * radial * radial;
      CHECK(std::fabs(d1 - d3) <= 1e-8 * std::max(d3, 1e-300) + 1e-300);
    }
  }
}
