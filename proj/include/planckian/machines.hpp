#pragma once

#include "planckian/operators.hpp"

namespace planckian {

/// A machine that must output the Gibbs state of either H1 or H2 (at a
/// common inverse temperature) from the same initial state. kappa = H2 - H1
/// drives the discrimination stage; lambda_up/lambda_down are its extreme
/// eigenvalues, so the seminorm is lambda_up - lambda_down.
class TwoPointTask {
 public:
  TwoPointTask(HermitianOperator h1, HermitianOperator h2, double beta);

  const HermitianOperator& h1() const { return h1_; }
  const HermitianOperator& h2() const { return h2_; }
  double beta() const { return beta_; }
  const HermitianOperator& kappa() const { return kappa_; }
  double lambda_up() const { return lambda_up_; }
  double lambda_down() const { return lambda_down_; }
  double kappa_norm() const { return lambda_up_ - lambda_down_; }

 private:
  HermitianOperator h1_;
  HermitianOperator h2_;
  HermitianOperator kappa_;
  double beta_;
  double lambda_up_;
  double lambda_down_;
};

/// Overlap cos^2(|kappa| tau / 2) of the two branch states after evolving
/// the equal-superposition probe for time tau; first zero at tau = pi/|kappa|.
double discrimination_overlap(const TwoPointTask& task, double tau);

/// Shortest time producing pure probe states whose angle equals the Bures
/// angle of the two target Gibbs states: 2 D(omega1, omega2) / |kappa|.
/// Equals tau_Pl * pairwise_chi(H1, H2, beta, 0) identically.
double optimal_two_point_time(const TwoPointTask& task);

/// Fidelity of the two Gibbs targets: the purification overlap the final
/// machine isometry must realize.
double uhlmann_target_overlap(const TwoPointTask& task);

/// Time cost of a machine that swaps in a pre-built Gibbs state. Zero for a
/// single target (state preparation); more than one distinct target is not
/// thermalization by swapping, so it throws NotAThermalizer.
double swap_machine_time(int target_count);

}  // namespace planckian
