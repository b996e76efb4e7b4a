#pragma once

#include "planckian/operators.hpp"

namespace planckian {

/// Uhlmann fidelity F(rho, sigma) = (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2.
/// Symmetric, in [0,1]; for commuting diagonal states equals (sum sqrt(p q))^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Bures angle arccos(sqrt(F)) in [0, pi/2]; a metric on density matrices.
double bures_angle(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Bures distance, D_B^2 = 2(1 - sqrt(F)); in [0, sqrt(2)].
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Bures angle between two diagonal qubit states with ground populations
/// p and q: arccos(sqrt(p q) + sqrt((1-p)(1-q))).
double bures_angle_diag_qubit(double p, double q);

}  // namespace planckian
