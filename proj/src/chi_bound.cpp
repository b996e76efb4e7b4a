#include "planckian/chi_bound.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "planckian/bures.hpp"
#include "planckian/golden.hpp"
#include "planckian/parallel.hpp"
#include "planckian/random_states.hpp"

namespace planckian {

namespace {

constexpr double kDeltaMin = 1e-3;
constexpr double kDeltaMax = 50.0;  // objective decays ~1/delta beyond

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

double pairwise_chi(const HermitianOperator& h1, const HermitianOperator& h2,
                    double beta, double epsilon) {
  Matrix diff = h1.entries() - h2.entries();
  const double norm = spectral_seminorm(diff);
  const double scale = std::max({1.0, spectral_seminorm(h1.entries()),
                                 spectral_seminorm(h2.entries())});
  if (norm <= 1e-12 * scale) {
    throw DegeneratePair("pairwise_chi: H1 - H2 proportional to identity");
  }
  const double d = bures_angle(gibbs_state(h1, beta), gibbs_state(h2, beta));
  return (2.0 * d - 4.0 * epsilon) / (beta * norm);
}

double chi_lower_ansatz(double p_star, double alpha, double delta, double epsilon) {
  const double p = p_star, q = 1.0 - p_star;
  const double num = p + q * std::exp((1.0 - 2.0 * alpha) * delta / 2.0);
  const double den = std::sqrt(p + q * std::exp(-alpha * delta)) *
                     std::sqrt(p + q * std::exp((1.0 - alpha) * delta));
  const double sf = clamp01(num / den);
  return (2.0 * std::acos(sf) - 4.0 * epsilon) / delta;
}

ChiBoundResult chi_lower_optimized(double p_star, double epsilon) {
  if (!(p_star > 0.0 && p_star < 1.0)) {
    throw Error("chi_lower_optimized: p_star must be in (0,1)");
  }
  const int n_alpha = 21, n_delta = 40;
  const double log_lo = std::log(kDeltaMin), log_hi = std::log(kDeltaMax);
  const double dlog = (log_hi - log_lo) / (n_delta - 1);

  auto objective = [&](double alpha, double log_delta) {
    return chi_lower_ansatz(p_star, alpha, std::exp(log_delta), epsilon);
  };

  // Coarse grid; delta ascending inner loop so ties keep the smaller delta.
  struct Start {
    double value, alpha, log_delta;
  };
  std::vector<Start> grid(n_alpha * n_delta);
  parallel_for(n_alpha, [&](std::ptrdiff_t ia) {
    const double alpha = static_cast<double>(ia) / (n_alpha - 1);
    for (int id = 0; id < n_delta; ++id) {
      const double ld = log_lo + id * dlog;
      grid[ia * n_delta + id] = {objective(alpha, ld), alpha, ld};
    }
  });
  std::vector<Start> starts;
  for (const auto& g : grid) {
    starts.push_back(g);
  }
  std::sort(starts.begin(), starts.end(), [](const Start& a, const Start& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.log_delta < b.log_delta;
  });
  starts.resize(3);

  ChiBoundResult best;
  best.kind = ChiKind::LowerAnsatz;
  best.p_star = p_star;
  best.value = -std::numeric_limits<double>::infinity();
  for (const auto& s : starts) {
    double alpha = s.alpha, ld = s.log_delta;
    double value = s.value;
    for (int round = 0; round < 5; ++round) {
      auto [ld_new, v1] = golden_maximize(
          [&](double x) { return objective(alpha, x); },
          std::max(log_lo, ld - 2.0 * dlog), std::min(log_hi, ld + 2.0 * dlog), 1e-7);
      ld = ld_new;
      const double astep = 2.0 / (n_alpha - 1);
      auto [a_new, v2] = golden_maximize(
          [&](double x) { return objective(x, ld); }, std::max(0.0, alpha - astep),
          std::min(1.0, alpha + astep), 1e-8);
      alpha = a_new;
      if (std::abs(v2 - value) < 1e-12 && round >= 1) {
        value = v2;
        break;
      }
      value = v2;
    }
    const bool better =
        value > best.value + 1e-12 ||
        (std::abs(value - best.value) <= 1e-12 && ld < std::log(best.delta_used));
    if (better) {
      best.value = value;
      best.alpha = alpha;
      best.delta_used = std::exp(ld);
    }
  }
  return best;
}

double chi_upper(double delta, double epsilon, double beta) {
  if (!(delta > 0)) throw Error("chi_upper: delta must be > 0");
  return 0.5 - 4.0 * epsilon / (beta * delta);
}

ChiBoundResult chi_exact_bruteforce(const BoundQuery& query, int grid, uint64_t seed) {
  const int d = query.h_bar.dim();
  if (d > 3) throw UnsupportedDimension("chi_exact_bruteforce: dim must be <= 3");
  Spectrum s = hermitian_eig(query.h_bar);

  // Structured directions in the eigenbasis of H_bar: two-level diagonal
  // shifts (one per proper subset of levels) and pairwise transversal
  // couplings; plus an equal number of random Hermitian directions.
  std::vector<Matrix> directions;
  for (uint32_t mask = 1; mask < (1u << d) - 1; ++mask) {
    Matrix k = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) k(i, i) = 1.0;
    }
    directions.push_back(s.eigenvectors * k * s.eigenvectors.adjoint());
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Matrix k = Matrix::Zero(d, d);
      k(i, j) = 0.5;
      k(j, i) = 0.5;
      directions.push_back(s.eigenvectors * k * s.eigenvectors.adjoint());
    }
  }
  StateSampler sampler(seed);
  const int n_random = std::max<int>(grid, static_cast<int>(directions.size()));
  for (int i = 0; i < n_random; ++i) {
    directions.push_back(sampler.direction(d).entries());
  }

  const int n_alpha = 21;
  const std::array<double, 4> shells = {1.0, 0.75, 0.5, 0.25};
  const size_t pair_count = directions.size() * n_alpha * shells.size();
  if (pair_count > 1000000) {
    throw UnsupportedDimension("chi_exact_bruteforce: candidate budget exceeded");
  }

  struct Local {
    double value = -std::numeric_limits<double>::infinity();
    double alpha = 0.0, delta = 0.0;
    Matrix h1, h2;
  };
  std::vector<Local> local(directions.size());
  parallel_for(static_cast<std::ptrdiff_t>(directions.size()), [&](std::ptrdiff_t di) {
    Local& loc = local[di];
    for (double shell : shells) {
      const double radius = shell * query.delta;
      for (int ia = 0; ia < n_alpha; ++ia) {
        const double alpha = static_cast<double>(ia) / (n_alpha - 1);
        Matrix h1 = query.h_bar.entries() + alpha * radius * directions[di];
        Matrix h2 = query.h_bar.entries() - (1.0 - alpha) * radius * directions[di];
        double chi;
        try {
          chi = pairwise_chi(HermitianOperator(h1), HermitianOperator(h2), query.beta,
                             query.epsilon);
        } catch (const DegeneratePair&) {
          continue;
        }
        if (chi > loc.value) {
          loc.value = chi;
          loc.alpha = alpha;
          loc.delta = radius;
          loc.h1 = std::move(h1);
          loc.h2 = std::move(h2);
        }
      }
    }
  });

  ChiBoundResult best;
  best.kind = ChiKind::ExactBruteforce;
  best.value = -std::numeric_limits<double>::infinity();
  for (const auto& loc : local) {
    if (loc.value > best.value) {
      best.value = loc.value;
      best.alpha = loc.alpha;
      best.delta_used = loc.delta;
      best.witness_pair = std::make_pair(loc.h1, loc.h2);
    }
  }
  return best;
}

double speed_limit_rhs(double t, const HermitianOperator& h1, const HermitianOperator& h2,
                       double beta) {
  if (t < 0) throw Error("speed_limit_rhs: t must be >= 0");
  Matrix diff = h1.entries() - h2.entries();
  const double norm = spectral_seminorm(diff);
  const double scale = std::max({1.0, spectral_seminorm(h1.entries()),
                                 spectral_seminorm(h2.entries())});
  if (norm <= 1e-12 * scale) {
    throw DegeneratePair("speed_limit_rhs: H1 - H2 proportional to identity");
  }
  const double d = bures_angle(gibbs_state(h1, beta), gibbs_state(h2, beta));
  return 0.5 * d - 0.25 * t * norm;
}

double intro_regime_bound(double beta, double gap, double ground_prob) {
  if (!(gap > 0)) throw Error("intro_regime_bound: gap must be > 0");
  if (beta * gap <= 1.0) {
    return beta * std::sqrt(std::exp(1.0)) / (1.0 + std::exp(1.0));
  }
  if (!(ground_prob > 0.5 && ground_prob < 1.0)) {
    throw Error("intro_regime_bound: gapped branch needs 1/2 < p0 < 1");
  }
  return (2.0 * ground_prob - 1.0) / gap;
}

}  // namespace planckian
