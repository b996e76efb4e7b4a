#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "planckian/gibbs.hpp"
#include "planckian/operators.hpp"

namespace planckian {

/// Bipartition of Gibbs populations into blocks of weight p_star and
/// 1 - p_star, with unnormalized block weights q0, q1 (p_star = q0/(q0+q1)).
struct CoarseGraining {
  std::vector<int> block;  // indices in the p_star block
  double p_star = 0.0;
  double q0 = 0.0;
  double q1 = 0.0;
  bool optimal = true;  // false when the greedy fallback was used
};

/// Hermitian perturbation direction with its cached spectral seminorm.
struct Perturbation {
  HermitianOperator direction;
  double seminorm;

  explicit Perturbation(HermitianOperator x)
      : direction(std::move(x)), seminorm(spectral_seminorm(direction)) {
    if (!(seminorm > 0)) throw InvalidOperator("Perturbation: seminorm must be > 0");
  }
};

/// Quantum Fisher information of the thermal family omega(beta, H + theta X')
/// at theta = 0, evaluated in the eigenbasis of H with the adimensional
/// convention X = beta H. Requires finite beta (all populations > 0).
double qfi_thermal(const HermitianOperator& h, double beta, const Perturbation& xprime);

/// Finite-difference Bures oracle: F = lim 4 D(rho_t0, rho_t0+dt)^2 / dt^2,
/// symmetric difference with one Richardson step at (h, h/2). The step is
/// enlarged (up to 50x) when the probed angle sits near the fidelity noise
/// floor. Throws NumericalInstability when the two estimates disagree by
/// > 1e-3 relative.
double qfi_finite_difference(const std::function<DensityMatrix(double)>& family,
                             double theta0, double h = 1e-3);

/// Diagonal coarse-grained bound sqrt(p*(1 - p*)).
double chi_tilde_diagonal(const CoarseGraining& cg);

/// Coherent pairwise bound over disjoint index pairs; equal populations
/// contribute their analytic limit p_i/2.
double chi_tilde_coherent(const Vector& populations,
                          const std::vector<std::pair<int, int>>& pairs);

/// Exact qubit optimum (2p-1)/ln(p/(1-p)), continuous at p = 1/2.
double chi_tilde_qubit(double p);

/// Bipartition maximizing p*(1 - p*): exhaustive subset search for
/// dim <= 24, greedy largest-first above (flagged non-optimal).
CoarseGraining best_bipartition(const Vector& populations);

/// Generalized Heisenberg limit |kappa|^2 tau^2 (hbar = 1).
double heisenberg_qfi_bound(double tau, const Perturbation& kappa);

/// k-separable dynamical QFI bound t^2 k^2 ceil(n/k) h_norm^2 / 4.
double k_separable_qfi_bound(double t, int k, int n, double h_norm);

}  // namespace planckian
