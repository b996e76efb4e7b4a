#pragma once

#include <optional>

#include "planckian/gibbs.hpp"
#include "planckian/operators.hpp"

namespace planckian {

constexpr double kEpsilonMax = 0.78539816339744831;  // pi/4

/// Query for the dimensionless bound factor chi(H_bar, delta, epsilon).
struct BoundQuery {
  HermitianOperator h_bar;
  double beta;
  double delta;    // ball radius in spectral seminorm (energy units)
  double epsilon;  // Bures-angle error, radians in [0, pi/2]
};

enum class ChiKind { LowerAnsatz, LowerExactPair, Upper, ExactBruteforce };

/// A chi value together with the witness attaining it.
struct ChiBoundResult {
  double value = 0.0;
  ChiKind kind = ChiKind::LowerAnsatz;
  double alpha = 0.0;       // ansatz asymmetry in [0,1]
  double delta_used = 0.0;  // ball radius actually used (beta = 1 units)
  double p_star = 0.0;
  std::optional<std::pair<Matrix, Matrix>> witness_pair;
};

/// (2 D(omega1, omega2) - 4 eps) / (beta |H1 - H2|); may be negative.
double pairwise_chi(const HermitianOperator& h1, const HermitianOperator& h2,
                    double beta, double epsilon);

/// Two-level coarse-grained ansatz lower bound, beta = 1 units of delta.
double chi_lower_ansatz(double p_star, double alpha, double delta, double epsilon);

/// Maximizes chi_lower_ansatz over alpha in [0,1] and delta in (0, 50]:
/// 21 x 40 log-spaced coarse grid, then golden-section refinement per
/// coordinate to 1e-6. Ties break toward smaller delta.
ChiBoundResult chi_lower_optimized(double p_star, double epsilon);

/// Trivial upper bound 1/2 - 4 eps / (beta delta).
double chi_upper(double delta, double epsilon, double beta);

/// Sampled maximum of pairwise_chi over Hamiltonian pairs in the delta-ball
/// (diagonal two-level shifts plus random Hermitian directions, 1:1).
/// A certified lower bound on the true maximum; dim(H_bar) <= 3.
ChiBoundResult chi_exact_bruteforce(const BoundQuery& query, int grid, uint64_t seed = 0);

/// Forbidden-region threshold at time t:
/// D(omega1, omega2)/2 - (t / 4 tau_Pl) beta |H1 - H2|  (tau_Pl = beta).
double speed_limit_rhs(double t, const HermitianOperator& h1, const HermitianOperator& h2,
                       double beta);

/// Regime summary: tau_Pl sqrt(e)/(1+e) when beta*gap <= 1, else
/// (2 p0 - 1)/gap. Returns a time in natural units.
double intro_regime_bound(double beta, double gap, double ground_prob);

}  // namespace planckian
