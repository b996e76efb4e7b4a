#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "planckian/digamma.hpp"
#include "planckian/rlm.hpp"

using namespace planckian;

namespace {

constexpr double kGamma = 0.5772156649015329;  // Euler-Mascheroni

RlmConfig constant_config(double e, double g, double beta, double p0) {
  RlmConfig cfg;
  cfg.e_s = e;
  cfg.beta = beta;
  cfg.p0 = p0;
  cfg.schedule = CouplingSchedule::constant(g);
  return cfg;
}

RlmConfig decaying_config(double e, double a, double b, double beta, double p0) {
  RlmConfig cfg;
  cfg.e_s = e;
  cfg.beta = beta;
  cfg.p0 = p0;
  cfg.schedule = CouplingSchedule::decaying(a, b);
  return cfg;
}

}  // namespace

TEST_CASE("complex digamma") {
  CHECK(digamma_complex({1.0, 0.0}).real() == doctest::Approx(-kGamma).epsilon(1e-12));
  CHECK(digamma_complex({0.5, 0.0}).real() ==
        doctest::Approx(-kGamma - 2.0 * std::log(2.0)).epsilon(1e-12));
  // Reflection branch: psi(-1/2) = 2 - gamma - 2 ln 2.
  CHECK(digamma_complex({-0.5, 0.0}).real() ==
        doctest::Approx(2.0 - kGamma - 2.0 * std::log(2.0)).epsilon(1e-12));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 100; ++i) {
    std::complex<double> z{u(rng), u(rng)};
    if (z.imag() == 0.0) z += std::complex<double>(0, 0.1);
    const auto lhs = digamma_complex(z + 1.0) - digamma_complex(z);
    const auto rhs = 1.0 / z;
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
  CHECK_THROWS_AS(digamma_complex({0.0, 0.0}), PoleError);
  CHECK_THROWS_AS(digamma_complex({-3.0, 0.0}), PoleError);
}

TEST_CASE("Fermi-Dirac distribution") {
  CHECK(fermi_dirac(0.0, 1.0) == doctest::Approx(0.5));
  CHECK(fermi_dirac(1.0, 1.0) == doctest::Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-14));
  for (double w : {0.1, 0.7, 3.0, 50.0, 800.0}) {
    CHECK(fermi_dirac(-w, 2.0) + fermi_dirac(w, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("constant-coupling steady state") {
  CHECK(rlm_steady_state_constant(0.0, 0.4, 1.3) == doctest::Approx(0.5).epsilon(1e-14));
  // Weak coupling approaches the bare Fermi occupation.
  CHECK(rlm_steady_state_constant(1.0, 0.1, 1.0) ==
        doctest::Approx(fermi_dirac(1.0, 1.0)).epsilon(0.04));

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const double e = -2.0 + 4.0 * u(rng);
    const double g = 0.2 + 1.5 * u(rng);
    const double beta = 0.4 + 1.6 * u(rng);
    CHECK(rlm_steady_state_constant(e, g, beta) ==
          doctest::Approx(rlm_steady_state_quadrature(e, g, beta)).epsilon(1e-8));
  }
}

TEST_CASE("constant-coupling occupation dynamics") {
  auto cfg = constant_config(1.0, 1.0, 1.0, 0.0);
  CHECK(rlm_occupation(cfg, 0.0) == doctest::Approx(0.0));

  // Resonant symmetric point is stationary at 1/2.
  auto stationary = constant_config(0.0, 0.8, 1.0, 0.5);
  for (double t : {0.05, 0.3, 1.0, 4.0}) {
    CHECK(rlm_occupation(stationary, t) == doctest::Approx(0.5).epsilon(1e-7));
  }

  // Long-time limit reaches the digamma steady state.
  const double g = 1.0;
  const double p_inf = rlm_steady_state_constant(1.0, g, 1.0);
  CHECK(rlm_occupation(cfg, 20.0 / (g * g)) == doctest::Approx(p_inf).epsilon(1e-6));

  // Exponential convergence envelope.
  for (double t : {1.0, 2.0, 4.0, 8.0}) {
    const double dev = std::abs(rlm_occupation(cfg, t) - p_inf);
    CHECK(dev <= 2.0 * std::exp(-0.5 * g * g * t));
  }
}

TEST_CASE("decaying closed form basics") {
  // E = 0: the kernel vanishes and the survival term is exact.
  for (double t : {0.0, 0.1, 1.0, 10.0}) {
    CHECK(rlm_occupation_decaying(0.0, 1.0, 1.0, 0.01, 1.0, t) ==
          doctest::Approx(0.5 + 0.5 * 0.01 / (t + 0.01)).epsilon(1e-12));
  }
  CHECK(rlm_occupation_decaying(1.0, 1.0, 2.0, 0.05, 0.3, 0.0) == doctest::Approx(0.3));

  // Late-time limit is the bare thermal occupation.
  CHECK(rlm_occupation_decaying(1.0, 1.0, 1.0, 0.01, 1.0, 500.0) ==
        doctest::Approx(fermi_dirac(1.0, 1.0)).epsilon(0.02));
}

TEST_CASE("frequency-domain and time-domain representations agree") {
  const double beta = 1.0;
  auto cfg = decaying_config(1.0 / beta, 1.0, beta / 100.0, beta, 1.0);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.02, 3.0);
  for (int i = 0; i < 5; ++i) {
    const double t = u(rng);
    const double general = rlm_occupation(cfg, t);
    const double closed =
        rlm_occupation_decaying(cfg.e_s, beta, 1.0, beta / 100.0, cfg.p0, t);
    CHECK(general == doctest::Approx(closed).epsilon(1e-5));
  }
}

TEST_CASE("finite cutoff keeps memory of the initial state") {
  auto up = decaying_config(1.0, 1.0, 0.01, 1.0, 1.0);
  auto down = decaying_config(1.0, 1.0, 0.01, 1.0, 0.0);
  up.schedule.cutoff = down.schedule.cutoff = 0.5;
  const double late_up = rlm_occupation(up, 40.0);
  const double late_down = rlm_occupation(down, 40.0);
  CHECK(late_up - late_down > 1e-3);
  // Frozen after the cutoff.
  CHECK(rlm_occupation(up, 40.0) == doctest::Approx(rlm_occupation(up, 5.0)).epsilon(1e-12));
}

TEST_CASE("distance to the local thermal state") {
  auto cfg = constant_config(1.0, 1.0, 1.0, fermi_dirac(1.0, 1.0));
  CHECK(rlm_bures_to_thermal(cfg, 0.0) == doctest::Approx(0.0).scale(1).epsilon(1e-9));
  auto half = constant_config(1.0, 1.0, 1.0, 0.5);
  CHECK(rlm_bures_to_thermal(half, 0.0) ==
        doctest::Approx(0.2401905395668648).epsilon(1e-9));
}

TEST_CASE("thermalization time") {
  // Stationary configuration thermalizes instantly.
  auto stationary = constant_config(0.0, 0.8, 1.0, 0.5);
  auto r0 = thermalization_time(stationary, 0.05);
  CHECK(r0.reached);
  CHECK(r0.time == 0.0);

  // Strong constant coupling drags the steady state away from the local
  // thermal target: small epsilon becomes unreachable.
  auto strong = constant_config(2.0, 2.0, 1.0, 0.5);
  const double d_inf = rlm_bures_to_thermal(strong, 1e6);
  auto ru = thermalization_time(strong, 0.5 * d_inf);
  CHECK_FALSE(ru.reached);

  // Decaying coupling reaches the target; the crossing satisfies D = eps.
  auto dec = decaying_config(1.0, 1.0, 0.01, 1.0, 1.0);
  const double eps = 0.05;
  auto rd = thermalization_time(dec, eps);
  CHECK(rd.reached);
  CHECK(rd.time > 0.0);
  CHECK(rlm_bures_to_thermal(dec, rd.time) == doctest::Approx(eps).epsilon(1e-4));
  CHECK_THROWS_AS(thermalization_time(dec, 0.0), Error);
}

TEST_CASE("forbidden region margins stay nonnegative") {
  auto c1 = decaying_config(0.0, 1.0, 0.01, 1.0, 1.0);
  auto c2 = decaying_config(1.0, 1.0, 0.01, 1.0, 1.0);
  std::vector<double> times;
  for (int i = 0; i <= 50; ++i) times.push_back(0.8 * i / 50);
  auto report = forbidden_region_check(c1, c2, times);
  CHECK(report.min_margin >= -1e-4);
  // After the threshold time the right-hand side is non-positive.
  CHECK(report.rhs.back() <= 0.0);

  auto mismatched = decaying_config(1.0, 1.0, 0.01, 1.0, 0.3);
  CHECK_THROWS_AS(forbidden_region_check(c1, mismatched, times), Error);
  CHECK_THROWS_AS(forbidden_region_check(c1, c1, times), DegeneratePair);
}
