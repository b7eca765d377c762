#pragma once

// Finite-difference oracle for -psi'' + W(s) psi = eps psi on [0, L] with
// Dirichlet ends. The three-point Laplacian on the interior nodes
// s_i = i h, h = L / (n + 1), gives a symmetric tridiagonal matrix whose
// lowest eigenvalues are found by Sturm-sequence bisection.
//
// W is only ever evaluated at interior nodes, so inverse-square potentials
// never see s = 0.

#include <functional>
#include <utility>
#include <vector>

namespace spiralbox::fd {

using Potential = std::function<double(double)>;

struct TridiagonalOperator {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size() == diagonal.size() - 1
  double grid_step = 0.0;
  double length = 0.0;

  std::size_t dimension() const { return diagonal.size(); }
};

/// diagonal[i] = 2/h^2 + W(s_i), off_diagonal[i] = -1/h^2.
/// Throws std::invalid_argument for n_interior < 1 or L <= 0 and
/// std::domain_error if W is not finite at a node.
TridiagonalOperator discretize(const Potential& w, double length, int n_interior);

/// Number of eigenvalues strictly below `shift`, from the signs of the LDL^T
/// pivots of (T - shift I).
int sturm_count(const TridiagonalOperator& op, double shift);

/// Interval containing the whole spectrum.
std::pair<double, double> gershgorin_bounds(const TridiagonalOperator& op);

enum class Execution { sequential, parallel };

/// The `count` smallest eigenvalues in increasing order. Each eigenvalue is
/// bisected independently from the Gershgorin interval until the bracket is
/// no wider than a few ulps of the Gershgorin radius, well inside
/// 1e-10 * (2 / h^2). Parallel execution gives bit-identical results.
std::vector<double> eigenvalues_lowest(const TridiagonalOperator& op, int count,
                                       Execution execution = Execution::sequential);

/// Richardson extrapolation from grids of n_coarse and 2 n_coarse interior
/// nodes, cancelling the h^2 error term:
///   eps = (h_c^2 eps_f - h_f^2 eps_c) / (h_c^2 - h_f^2).
std::vector<double> richardson_refine(const Potential& w, double length,
                                      int count, int n_coarse,
                                      Execution execution = Execution::sequential);

/// (omega^2 - 1/4) / s^2: the potential whose regular solutions are
/// sqrt(s) J_omega(sqrt(eps) s).
Potential inverse_square_potential(double omega);

/// -1 / (4 sigma^2 s^2): the geometry-induced potential of the polyene
/// curve taken literally (in units 2m/hbar^2 = 1). Supercritical for
/// sigma < 1, so its discrete ground state runs off to -infinity as h -> 0.
Potential literal_polyene_potential(double sigma);

}  // namespace spiralbox::fd
