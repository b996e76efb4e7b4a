#include "planckian/rlm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "planckian/bures.hpp"
#include "planckian/chi_bound.hpp"
#include "planckian/digamma.hpp"
#include "planckian/operators.hpp"
#include "planckian/parallel.hpp"
#include "planckian/quadrature.hpp"

namespace planckian {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

void check_probability(double p, const char* where) {
  if (p < -1e-8 || p > 1.0 + 1e-8) {
    throw QuadratureError(std::string(where) + ": occupation outside [0,1]");
  }
}

// Re J(t) = int dOmega f(Omega) Gamma cos((E-Omega) t) / (Gamma^2 + (E-Omega)^2).
// The window is chosen so that the integration-by-parts bound on the left
// (f -> 1) tail stays below abs_tol; the right tail is cut by the Fermi factor.
double constant_memory_integral(double e, double gamma, double beta, double t,
                                const RlmQuadrature& quad, double abs_tol) {
  const double fermi_cut = quad.window_scale / beta;
  double delta_max = std::sqrt(2.0 * gamma / (abs_tol * t));
  delta_max = std::max(delta_max, fermi_cut + std::abs(e) + 10.0 * gamma);
  const double lo = e - delta_max;
  const double hi = std::max(e, 0.0) + fermi_cut;
  auto integrand = [&](double omega) {
    const double d = e - omega;
    return fermi_dirac(omega, beta) * gamma * std::cos(d * t) /
           (gamma * gamma + d * d);
  };
  const double n_osc = (hi - lo) * t / (2.0 * kPi);
  const int init_panels =
      std::min(100000, std::max(16, 4 * static_cast<int>(std::ceil(n_osc))));
  return adaptive_integrate(integrand, lo, hi, abs_tol, init_panels);
}

double occupation_constant(const RlmConfig& cfg, double t) {
  const double g = cfg.schedule.g;
  const double t_eff = std::min(t, cfg.schedule.cutoff);
  if (g == 0.0 || t_eff <= 0.0) return cfg.p0;
  const double gamma = 0.5 * g * g;
  if (gamma * t_eff < 1e-12) return cfg.p0;
  const double p_inf = rlm_steady_state_constant(cfg.e_s, g, cfg.beta);
  const double decay = std::exp(-2.0 * gamma * t_eff);
  double p = cfg.p0 * decay + (1.0 + decay) * p_inf;
  const double amp = std::exp(-gamma * t_eff);
  if (amp > 1e-14) {
    // The memory term enters scaled by amp, so the quadrature tolerance can
    // relax by the same factor.
    const double tol_j = std::min(1.0, cfg.quadrature.abs_tol * kPi / (2.0 * amp));
    const double j = constant_memory_integral(cfg.e_s, gamma, cfg.beta, t_eff,
                                              cfg.quadrature, tol_j);
    p -= (2.0 * amp / kPi) * j;
  }
  check_probability(p, "rlm_occupation(constant)");
  return clamp01(p);
}

// |int_0^t (s+b)^{(a-1)/2} e^{i delta s} ds|^2, closed form for a = 1,
// composite complex GK15 otherwise (4 panels per oscillation).
double window_amplitude_sq(double a, double b, double t, double delta) {
  if (a == 1.0) {
    if (std::abs(delta) * t < 1e-8) return t * t;
    const double s = std::sin(0.5 * delta * t);
    return 4.0 * s * s / (delta * delta);
  }
  const double n_osc = std::abs(delta) * t / (2.0 * kPi);
  const int panels = std::max(8, 4 * static_cast<int>(std::ceil(n_osc)) +
                                     static_cast<int>(std::ceil(t / std::max(b, t / 64.0))));
  std::complex<double> k = 0.0;
  const double w = t / panels;
  for (int pnl = 0; pnl < panels; ++pnl) {
    const double lo = pnl * w, hi = (pnl + 1) * w;
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    for (int i = 0; i < 8; ++i) {
      const double x = GaussKronrod15::abscissae[i];
      auto eval = [&](double s) {
        return std::pow(s + b, 0.5 * (a - 1.0)) *
               std::exp(std::complex<double>(0.0, delta * s));
      };
      std::complex<double> fv = (i == 7) ? eval(mid)
                                         : eval(mid - half * x) + eval(mid + half * x);
      k += GaussKronrod15::kronrod_weights[i] * fv * half;
    }
  }
  return std::norm(k);
}

double occupation_decaying_general(const RlmConfig& cfg, double t) {
  const double a = cfg.schedule.a, b = cfg.schedule.b;
  const double t_eff = std::min(t, cfg.schedule.cutoff);
  if (t_eff <= 0.0) return cfg.p0;
  const double e = cfg.e_s, beta = cfg.beta;
  const double survive = std::pow(b / (t_eff + b), a);
  const double prefactor = a * std::pow(t_eff + b, -a) / (2.0 * kPi);

  const double fermi_cut = cfg.quadrature.window_scale / beta;
  const double osc_cut = (a == 1.0 ? 2000.0 : 600.0) / t_eff;
  const double delta_left = std::max(osc_cut, 4.0 * (fermi_cut + std::abs(e)));
  const double omega_lo = e - delta_left;
  const double omega_hi = std::max(e, 0.0) + fermi_cut;

  auto integrand = [&](double omega) {
    return prefactor * fermi_dirac(omega, beta) *
           window_amplitude_sq(a, b, t_eff, e - omega);
  };
  const double n_osc = (omega_hi - omega_lo) * t_eff / (2.0 * kPi);
  const int init_panels =
      std::min(100000, std::max(16, 4 * static_cast<int>(std::ceil(n_osc))));
  double absorbed = adaptive_integrate(integrand, omega_lo, omega_hi,
                                       cfg.quadrature.abs_tol, init_panels);
  // Analytic left tail (f = 1 there): the amplitude square averages to
  // (w(t)^2 + w(0)^2)/delta^2 plus an oscillatory remainder that the
  // integration-by-parts bound makes negligible for the window above.
  const double wt = std::pow(t_eff + b, 0.5 * (a - 1.0));
  const double w0 = std::pow(b, 0.5 * (a - 1.0));
  absorbed += prefactor * (wt * wt + w0 * w0) / delta_left;

  double p = cfg.p0 * survive + absorbed;
  check_probability(p, "rlm_occupation(decaying)");
  return clamp01(p);
}

// Autocorrelation G(u) = int_u^t w(s) w(s-u) ds of the window function
// w(s) = (s+b)^{(a-1)/2}; closed form t - u when a = 1.
double window_autocorrelation(double a, double b, double t, double u) {
  if (a == 1.0) return t - u;
  auto f = [&](double s) {
    return std::pow(s + b, 0.5 * (a - 1.0)) * std::pow(s - u + b, 0.5 * (a - 1.0));
  };
  return adaptive_integrate(f, u, t, 1e-12 * std::max(1.0, t), 8);
}

}  // namespace

CouplingSchedule CouplingSchedule::constant(double g, double cutoff) {
  if (g < 0) throw ScheduleError("CouplingSchedule: constant g must be >= 0");
  if (!(cutoff > 0)) throw ScheduleError("CouplingSchedule: cutoff must be > 0");
  CouplingSchedule s;
  s.kind = Kind::Constant;
  s.g = g;
  s.cutoff = cutoff;
  return s;
}

CouplingSchedule CouplingSchedule::decaying(double a, double b, double cutoff) {
  if (!(a > 0) || !(b > 0)) {
    throw ScheduleError("CouplingSchedule: decaying needs a > 0 and b > 0");
  }
  if (!(cutoff > 0)) throw ScheduleError("CouplingSchedule: cutoff must be > 0");
  CouplingSchedule s;
  s.kind = Kind::Decaying;
  s.a = a;
  s.b = b;
  s.cutoff = cutoff;
  return s;
}

double fermi_dirac(double omega, double beta) {
  const double x = beta * omega;
  if (x > 0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

double rlm_steady_state_constant(double e, double g, double beta) {
  if (!(g > 0)) throw Error("rlm_steady_state_constant: g must be > 0");
  const std::complex<double> z(0.5 + beta / (2.0 * kPi) * 0.5 * g * g,
                               beta / (2.0 * kPi) * e);
  return 0.5 - digamma_complex(z).imag() / kPi;
}

double rlm_steady_state_quadrature(double e, double g, double beta) {
  if (!(g > 0)) throw Error("rlm_steady_state_quadrature: g must be > 0");
  const double gamma = 0.5 * g * g;
  // Split the Fermi factor into a step at Omega = 0 (integrated analytically
  // against the Lorentzian) and an exponentially localized remainder.
  const double step_part = 0.5 - std::atan(e / gamma) / kPi;
  auto remainder = [&](double omega) {
    const double r = fermi_dirac(omega, beta) - (omega < 0.0 ? 1.0 : 0.0);
    const double d = e - omega;
    return r * gamma / (gamma * gamma + d * d) / kPi;
  };
  const double window = 50.0 / beta + std::abs(e) + 10.0 * gamma;
  const double left = adaptive_integrate(remainder, -window, 0.0, 2.5e-10, 32);
  const double right = adaptive_integrate(remainder, 0.0, window, 2.5e-10, 32);
  return step_part + left + right;
}

double rlm_occupation(const RlmConfig& config, double t) {
  if (t < 0) throw Error("rlm_occupation: t must be >= 0");
  if (config.p0 < 0 || config.p0 > 1) throw Error("rlm_occupation: p0 must be in [0,1]");
  if (config.schedule.kind == CouplingSchedule::Kind::Constant) {
    return occupation_constant(config, t);
  }
  return occupation_decaying_general(config, t);
}

double rlm_occupation_decaying(double e, double beta, double a, double b, double p0,
                               double t) {
  if (!(a > 0) || !(b > 0)) throw ScheduleError("rlm_occupation_decaying: a, b > 0");
  if (t < 0) throw Error("rlm_occupation_decaying: t must be >= 0");
  const double survive = std::pow(b / (t + b), a);
  double p = 0.5 + (p0 - 0.5) * survive;
  if (e != 0.0 && t > 0.0) {
    // Banded sin/sinh kernel, reduced to one dimension through the window
    // autocorrelation G(u); the kernel dies off as e^{-pi u / beta}.
    const double band = 50.0 * beta / kPi;
    const double u_max = std::min(t, band);
    auto kernel = [&](double u) {
      const double x = kPi * u / beta;
      if (x < 1e-8) return e * beta / kPi * std::cos(e * u);
      return std::sin(e * u) / std::sinh(x);
    };
    auto f = [&](double u) { return kernel(u) * window_autocorrelation(a, b, t, u); };
    const double tol_i = 1e-9 * std::max(1.0, 2.0 * beta * std::pow(t + b, a) /
                                                  std::max(a, 1e-12));
    const int init_panels =
        std::max(16, 4 * static_cast<int>(std::ceil(std::abs(e) * u_max / (2.0 * kPi))) +
                         static_cast<int>(std::ceil(u_max / (0.5 * beta))));
    const double integral =
        2.0 * adaptive_integrate(f, 0.0, u_max, std::min(tol_i, 1e30), init_panels);
    p -= a / (2.0 * beta * std::pow(t + b, a)) * integral;
  }
  check_probability(p, "rlm_occupation_decaying");
  return clamp01(p);
}

namespace {

// Fastest accurate evaluator per schedule: the closed-form reduction for
// decaying couplings, the memory-integral decomposition for constant ones.
double occupation_preferred(const RlmConfig& config, double t) {
  if (config.schedule.kind == CouplingSchedule::Kind::Decaying) {
    return rlm_occupation_decaying(config.e_s, config.beta, config.schedule.a,
                                   config.schedule.b, config.p0,
                                   std::min(t, config.schedule.cutoff));
  }
  return occupation_constant(config, t);
}

}  // namespace

double rlm_bures_to_thermal(const RlmConfig& config, double t) {
  const double p = occupation_preferred(config, t);
  const double q = fermi_dirac(config.e_s, config.beta);
  return bures_angle_diag_qubit(p, q);
}

Trajectory rlm_trajectory(const RlmConfig& config, const std::vector<double>& times) {
  Trajectory traj;
  traj.times = times;
  traj.p.resize(times.size());
  traj.d_to_thermal.resize(times.size());
  const double q = fermi_dirac(config.e_s, config.beta);
  parallel_for(static_cast<std::ptrdiff_t>(times.size()), [&](std::ptrdiff_t i) {
    traj.p[i] = occupation_preferred(config, times[i]);
    traj.d_to_thermal[i] = bures_angle_diag_qubit(traj.p[i], q);
  });
  return traj;
}

ThermalizationResult thermalization_time(const RlmConfig& config, double epsilon) {
  if (!(epsilon > 0 && epsilon < kPi / 2)) {
    throw Error("thermalization_time: epsilon must be in (0, pi/2)");
  }
  auto dist = [&](double t) { return rlm_bures_to_thermal(config, t); };
  if (dist(0.0) <= epsilon) return {true, 0.0};

  // A constant coupling converges to its digamma steady state; if that state
  // already violates epsilon the target is never reached. (With a finite
  // cutoff the occupation freezes, which the scan below detects instead.)
  if (config.schedule.kind == CouplingSchedule::Kind::Constant &&
      std::isinf(config.schedule.cutoff) && config.schedule.g > 0) {
    const double p_inf =
        rlm_steady_state_constant(config.e_s, config.schedule.g, config.beta);
    const double d_inf =
        bures_angle_diag_qubit(p_inf, fermi_dirac(config.e_s, config.beta));
    if (d_inf > epsilon + 1e-12) return {false, {}};
  }

  const double step = config.beta / 100.0;
  const double horizon = 50.0 * config.beta;
  double t_lo = 0.0;
  double t_hi = -1.0;
  for (double t = step; t <= horizon + 0.5 * step; t += step) {
    if (dist(t) <= epsilon) {
      t_hi = t;
      break;
    }
    t_lo = t;
  }
  if (t_hi < 0.0) return {false, {}};
  for (int it = 0; it < 60 && t_hi - t_lo > 1e-10 * config.beta; ++it) {
    const double mid = 0.5 * (t_lo + t_hi);
    (dist(mid) <= epsilon ? t_hi : t_lo) = mid;
  }
  return {true, t_hi};
}

ForbiddenRegionReport forbidden_region_check(const RlmConfig& cfg1, const RlmConfig& cfg2,
                                             const std::vector<double>& times) {
  if (cfg1.p0 != cfg2.p0 || cfg1.beta != cfg2.beta ||
      cfg1.schedule.kind != cfg2.schedule.kind || cfg1.schedule.g != cfg2.schedule.g ||
      cfg1.schedule.a != cfg2.schedule.a || cfg1.schedule.b != cfg2.schedule.b) {
    throw Error("forbidden_region_check: configs must share p0, beta and schedule");
  }
  Vector lv1(2), lv2(2);
  lv1 << 0.0, cfg1.e_s;
  lv2 << 0.0, cfg2.e_s;
  const HermitianOperator h1 = HermitianOperator::diagonal(lv1);
  const HermitianOperator h2 = HermitianOperator::diagonal(lv2);
  // Throws DegeneratePair when the two dot energies coincide.
  (void)speed_limit_rhs(0.0, h1, h2, cfg1.beta);

  ForbiddenRegionReport report;
  report.times = times;
  const size_t n = times.size();
  report.d1.resize(n);
  report.d2.resize(n);
  report.rhs.resize(n);
  report.margin.resize(n);
  parallel_for(static_cast<std::ptrdiff_t>(n), [&](std::ptrdiff_t i) {
    report.d1[i] = rlm_bures_to_thermal(cfg1, times[i]);
    report.d2[i] = rlm_bures_to_thermal(cfg2, times[i]);
    report.rhs[i] = speed_limit_rhs(times[i], h1, h2, cfg1.beta);
    report.margin[i] = std::max(report.d1[i], report.d2[i]) - report.rhs[i];
  });
  report.min_margin = n == 0 ? 0.0
                             : *std::min_element(report.margin.begin(),
                                                 report.margin.end());
  if (report.min_margin < -1e-4) {
    throw BoundViolation("forbidden_region_check: speed limit violated beyond "
                         "quadrature tolerance");
  }
  return report;
}

}  // namespace planckian
