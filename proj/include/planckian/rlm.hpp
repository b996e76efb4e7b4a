#pragma once

#include <limits>
#include <vector>

#include "planckian/errors.hpp"

namespace planckian {

/// Dot-bath coupling profile: either constant g or g(t) = sqrt(a/(t+b)),
/// optionally switched off after `cutoff` (the occupation then freezes,
/// since diagonal dynamics stop when the tunneling vanishes).
struct CouplingSchedule {
  enum class Kind { Constant, Decaying };

  Kind kind = Kind::Constant;
  double g = 0.0;  // constant amplitude (sqrt-energy units)
  double a = 0.0;  // decaying strength (dimensionless)
  double b = 0.0;  // decaying offset (time units)
  double cutoff = std::numeric_limits<double>::infinity();

  static CouplingSchedule constant(double g,
                                   double cutoff = std::numeric_limits<double>::infinity());
  static CouplingSchedule decaying(double a, double b,
                                   double cutoff = std::numeric_limits<double>::infinity());
};

/// Frequency-quadrature controls for the occupation integrals.
struct RlmQuadrature {
  double abs_tol = 1e-9;          // target absolute error of each integral
  double window_scale = 50.0;     // Fermi-tail truncation at window_scale/beta
  double oscillation_window = 2000.0;  // left window extent ~ this / t
};

/// Single resonant level (dot energy e_s) coupled to a wide-band fermionic
/// bath at inverse temperature beta; initial occupation p0, diagonal state.
struct RlmConfig {
  double e_s = 0.0;
  double beta = 1.0;
  double p0 = 0.0;
  CouplingSchedule schedule;
  RlmQuadrature quadrature;
};

/// Sampled occupation curve with the Bures angle to the local thermal state.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> p;
  std::vector<double> d_to_thermal;
};

struct ThermalizationResult {
  bool reached = false;
  double time = std::numeric_limits<double>::infinity();
};

/// Per-time margins max(D1, D2) - rhs of the two-target speed limit.
struct ForbiddenRegionReport {
  std::vector<double> times;
  std::vector<double> d1;
  std::vector<double> d2;
  std::vector<double> rhs;
  std::vector<double> margin;
  double min_margin = 0.0;
};

/// f_beta(Omega) = 1/(1 + e^{beta Omega}); overflow-safe.
double fermi_dirac(double omega, double beta);

/// Steady-state occupation for constant coupling:
/// 1/2 - (1/pi) Im psi(1/2 + (beta/2 pi)(g^2/2 + i E)).
double rlm_steady_state_constant(double e, double g, double beta);

/// Same quantity by direct quadrature of the Lorentzian-weighted Fermi
/// function (independent cross-check of the closed form).
double rlm_steady_state_quadrature(double e, double g, double beta);

/// Occupation p(t) for any schedule; constant coupling uses the closed-form
/// inner amplitude and a single frequency quadrature, decaying couplings use
/// the nested amplitude integral.
double rlm_occupation(const RlmConfig& config, double t);

/// Closed-form reduction for g(t) = sqrt(a/(t+b)) without cutoff:
/// 1/2 + (p0 - 1/2)(b/(t+b))^a minus a banded sin/sinh double integral
/// (diagonal kernel value E beta / pi).
double rlm_occupation_decaying(double e, double beta, double a, double b, double p0,
                               double t);

/// Bures angle between diag(p, 1-p) at time t and the local thermal target
/// diag(f_beta(e_s), ...).
double rlm_bures_to_thermal(const RlmConfig& config, double t);

/// Occupation and thermal distance sampled on the given ascending times.
Trajectory rlm_trajectory(const RlmConfig& config, const std::vector<double>& times);

/// First time the trajectory enters the epsilon-ball of the thermal target
/// (scan step beta/100 up to 50 beta, then bisection). Not reached when the
/// steady state itself stays outside the ball or no crossing occurs within
/// the horizon.
ThermalizationResult thermalization_time(const RlmConfig& config, double epsilon);

/// Verifies that two evolutions with common initial state and schedule but
/// different dot energies never both enter the forbidden region. Throws
/// BoundViolation when a margin drops below -1e-4 rad.
ForbiddenRegionReport forbidden_region_check(const RlmConfig& cfg1, const RlmConfig& cfg2,
                                             const std::vector<double>& times);

}  // namespace planckian
