// Command-line front end: evaluates thermalization-time bound factors and
// exact resonant-level-model dynamics, emitting figure-ready CSV/JSON.

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planckian/bures.hpp"
#include "planckian/chi_bound.hpp"
#include "planckian/dataset.hpp"
#include "planckian/machines.hpp"
#include "planckian/metrology.hpp"
#include "planckian/parallel.hpp"
#include "planckian/rlm.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
  double beta = 1.0;
  uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions* opt) {
  cmd->add_option("--beta", opt->beta, "Inverse temperature (sets tau_Pl = beta)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt->seed, "Random seed for sampled searches");
  cmd->add_option("--format", opt->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt->out, "Output path (default: stdout)");
}

planckian::Dataset make_dataset(const std::string& command, const CommonOptions& opt) {
  planckian::Dataset ds;
  ds.add_meta("tool", std::string("planckian ") + kVersion);
  ds.add_meta("command", command);
  ds.add_meta("units", "hbar = k_B = 1; energies in k_B T; tau_Pl = beta");
  ds.add_meta("beta", opt.beta);
  ds.add_meta("seed", planckian::format_number(static_cast<double>(opt.seed)));
  return ds;
}

void emit(const planckian::Dataset& ds, const CommonOptions& opt) {
  planckian::write_dataset(
      ds, opt.out,
      opt.format == "json" ? planckian::OutputFormat::Json : planckian::OutputFormat::Csv);
}

std::string join_numbers(const std::vector<double>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += planckian::format_number(v[i]);
  }
  return s;
}

// Dimension-d locally-exact bound (2p-1)/ln((d-1)p/(1-p)); reduces to the
// exact qubit optimum at d = 2 and diverges at p = 1/d.
planckian::Dataset::Cell chi_tilde_dim(double p, int d) {
  if (d == 2) return planckian::chi_tilde_qubit(p);
  const double log_arg = (d - 1) * p / (1.0 - p);
  const double l = std::log(log_arg);
  if (std::abs(l) < 1e-12) return "inf";
  return (2.0 * p - 1.0) / l;
}

int cmd_fig_bounds(const CommonOptions& opt, std::vector<double> eps_units,
                   int pstar_grid) {
  if (eps_units.empty()) eps_units = {0.0, 0.05, 0.1, 0.2, 0.3};
  for (double e : eps_units) {
    if (e < 0.0 || e > 1.0) {
      std::cerr << "fig-bounds: --eps values must lie in [0, 1] (eps_max units)\n";
      return kExitUsage;
    }
  }
  auto ds = make_dataset("fig-bounds", opt);
  ds.add_meta("eps_over_eps_max", join_numbers(eps_units));
  ds.add_meta("pstar_grid", static_cast<double>(pstar_grid));
  ds.set_columns({"p_star", "eps_over_eps_max", "chi_lower", "alpha_star", "delta_star"});

  struct Row {
    double p, e, chi, alpha, delta;
  };
  std::vector<Row> rows(static_cast<size_t>(pstar_grid) * eps_units.size());
  planckian::parallel_for(static_cast<std::ptrdiff_t>(rows.size()), [&](std::ptrdiff_t k) {
    const int ie = static_cast<int>(k % eps_units.size());
    const int ip = static_cast<int>(k / eps_units.size());
    const double p = static_cast<double>(ip + 1) / (pstar_grid + 1);
    const double eps = eps_units[ie] * planckian::kEpsilonMax;
    auto r = planckian::chi_lower_optimized(p, eps);
    rows[k] = {p, eps_units[ie], r.value, r.alpha, r.delta_used};
  });
  for (const auto& r : rows) ds.add_row({r.p, r.e, r.chi, r.alpha, r.delta});
  emit(ds, opt);
  return 0;
}

int cmd_fig_qfi(const CommonOptions& opt, int grid) {
  const std::vector<int> dims = {2, 3, 10, 30, 100};
  auto ds = make_dataset("fig-qfi", opt);
  ds.add_meta("grid", static_cast<double>(grid));
  std::vector<std::string> cols = {"p", "chi_tilde_diagonal", "chi_tilde_qubit"};
  for (int d : dims) cols.push_back("chi_tilde_d" + std::to_string(d));
  ds.set_columns(cols);
  for (int i = 1; i <= grid; ++i) {
    const double p = static_cast<double>(i) / (grid + 1);
    planckian::CoarseGraining cg;
    cg.p_star = p;
    std::vector<planckian::Dataset::Cell> row = {
        p, planckian::chi_tilde_diagonal(cg), planckian::chi_tilde_qubit(p)};
    for (int d : dims) row.push_back(chi_tilde_dim(p, d));
    ds.add_row(std::move(row));
  }
  emit(ds, opt);
  return 0;
}

int cmd_tradeoff(const CommonOptions& opt, int grid) {
  auto ds = make_dataset("tradeoff", opt);
  ds.add_meta("grid", static_cast<double>(grid));
  ds.add_meta("p_star", 0.5);
  ds.set_columns({"eps", "eps_over_eps_max", "chi_lower", "alpha_star", "delta_star"});
  struct Row {
    double eps, chi, alpha, delta;
  };
  std::vector<Row> rows(grid);
  planckian::parallel_for(grid, [&](std::ptrdiff_t i) {
    const double eps =
        planckian::kEpsilonMax * static_cast<double>(i) / (grid - 1);
    auto r = planckian::chi_lower_optimized(0.5, eps);
    rows[i] = {eps, r.value, r.alpha, r.delta_used};
  });
  for (const auto& r : rows) {
    ds.add_row({r.eps, r.eps / planckian::kEpsilonMax, r.chi, r.alpha, r.delta});
  }
  emit(ds, opt);
  return 0;
}

planckian::HermitianOperator dot_hamiltonian(double e) {
  planckian::Vector lv(2);
  lv << 0.0, e;
  return planckian::HermitianOperator::diagonal(lv);
}

int cmd_rlm_constant(const CommonOptions& opt, std::vector<double> eps_units,
                     double e1_kt, double e2_kt, double p0, int grid, bool surface) {
  const double beta = opt.beta;
  auto ds = make_dataset("rlm-constant", opt);
  if (surface) {
    // Steady-state distance surface over (E, g): the epsilon a constant
    // coupling can ever reach for each dot energy.
    ds.add_meta("grid", static_cast<double>(grid));
    ds.set_columns({"e_over_kT", "beta_g_sq", "p_inf", "d_inf", "d_inf_over_eps_max"});
    for (int ie = 0; ie < grid; ++ie) {
      const double e_kt = -3.0 + 6.0 * ie / (grid - 1);
      for (int ig = 0; ig < grid; ++ig) {
        const double bg2 = std::pow(10.0, -2.0 + 3.0 * ig / (grid - 1));
        const double g = std::sqrt(bg2 / beta);
        const double p_inf = planckian::rlm_steady_state_constant(e_kt / beta, g, beta);
        planckian::RlmConfig cfg;
        cfg.e_s = e_kt / beta;
        cfg.beta = beta;
        const double q = planckian::fermi_dirac(cfg.e_s, beta);
        const double d_inf = planckian::bures_angle_diag_qubit(p_inf, q);
        ds.add_row({e_kt, bg2, p_inf, d_inf, d_inf / planckian::kEpsilonMax});
      }
    }
    emit(ds, opt);
    return 0;
  }

  if (eps_units.empty()) eps_units = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4};
  for (double e : eps_units) {
    if (e <= 0.0 || e >= 2.0) {
      std::cerr << "rlm-constant: --eps values must lie in (0, 2) (eps_max units)\n";
      return kExitUsage;
    }
  }
  ds.add_meta("eps_over_eps_max", join_numbers(eps_units));
  ds.add_meta("e1_over_kT", e1_kt);
  ds.add_meta("e2_over_kT", e2_kt);
  ds.add_meta("p0", p0);
  ds.add_meta("grid", static_cast<double>(grid));
  ds.set_columns({"beta_g_sq", "g", "eps_over_eps_max", "time_bound_over_tau_pl",
                  "tau_min_over_tau_pl"});

  const auto h1 = dot_hamiltonian(e1_kt / beta);
  const auto h2 = dot_hamiltonian(e2_kt / beta);
  struct Row {
    double bg2, g, eps;
    double bound;
    bool reached;
    double tau;
  };
  std::vector<Row> rows(static_cast<size_t>(grid) * eps_units.size());
  planckian::parallel_for(static_cast<std::ptrdiff_t>(rows.size()), [&](std::ptrdiff_t k) {
    const int ie = static_cast<int>(k % eps_units.size());
    const int ig = static_cast<int>(k / eps_units.size());
    const double bg2 = std::pow(10.0, -2.0 + 3.0 * ig / (grid - 1));
    const double g = std::sqrt(bg2 / beta);
    const double eps = eps_units[ie] * planckian::kEpsilonMax;
    const double bound = planckian::pairwise_chi(h1, h2, beta, eps);
    planckian::RlmConfig cfg;
    cfg.e_s = e2_kt / beta;
    cfg.beta = beta;
    cfg.p0 = p0;
    cfg.schedule = planckian::CouplingSchedule::constant(g);
    auto res = planckian::thermalization_time(cfg, eps);
    rows[k] = {bg2, g, eps_units[ie], bound, res.reached, res.time};
  });
  for (const auto& r : rows) {
    std::vector<planckian::Dataset::Cell> row = {r.bg2, r.g, r.eps, r.bound};
    if (r.reached) {
      row.push_back(r.tau / beta);
    } else {
      row.push_back("unreachable");
    }
    ds.add_row(std::move(row));
  }
  emit(ds, opt);
  return 0;
}

int cmd_rlm_decaying(const CommonOptions& opt, double a, double b_units,
                     std::vector<double> p0s, std::vector<double> e1_kt,
                     std::vector<double> e2_kt, double tmax_units, int grid) {
  const double beta = opt.beta;
  if (p0s.empty()) p0s = {0.0, 0.5, 1.0};
  for (double p : p0s) {
    if (p < 0.0 || p > 1.0) {
      std::cerr << "rlm-decaying: --p0 values must lie in [0, 1]\n";
      return kExitUsage;
    }
  }
  std::vector<std::pair<double, double>> pairs;
  if (e1_kt.empty() && e2_kt.empty()) {
    pairs = {{0.0, 1.0}, {-1.0, 1.0}, {0.0, 3.0}};
  } else if (e1_kt.size() == e2_kt.size()) {
    for (size_t i = 0; i < e1_kt.size(); ++i) pairs.emplace_back(e1_kt[i], e2_kt[i]);
  } else {
    std::cerr << "rlm-decaying: --e1 and --e2 must be given the same number of times\n";
    return kExitUsage;
  }
  for (auto [x, y] : pairs) {
    if (x == y) {
      std::cerr << "rlm-decaying: dot energies of a pair must differ\n";
      return kExitUsage;
    }
  }
  auto ds = make_dataset("rlm-decaying", opt);
  ds.add_meta("a", a);
  ds.add_meta("b_over_tau_pl", b_units);
  ds.add_meta("p0", join_numbers(p0s));
  ds.add_meta("tmax_over_tau_pl", tmax_units);
  ds.add_meta("grid", static_cast<double>(grid));
  ds.set_columns({"e1_over_kT", "e2_over_kT", "p0", "t_over_tau_pl", "p1", "p2", "d1",
                  "d2", "rhs", "margin"});

  std::vector<double> times(grid + 1);
  for (int i = 0; i <= grid; ++i) times[i] = tmax_units * beta * i / grid;

  for (auto [x1, x2] : pairs) {
    for (double p0 : p0s) {
      planckian::RlmConfig c1, c2;
      c1.beta = c2.beta = beta;
      c1.p0 = c2.p0 = p0;
      c1.schedule = c2.schedule = planckian::CouplingSchedule::decaying(a, b_units * beta);
      c1.e_s = x1 / beta;
      c2.e_s = x2 / beta;
      auto report = planckian::forbidden_region_check(c1, c2, times);
      auto t1 = planckian::rlm_trajectory(c1, times);
      auto t2 = planckian::rlm_trajectory(c2, times);
      for (size_t i = 0; i < times.size(); ++i) {
        ds.add_row({x1, x2, p0, times[i] / beta, t1.p[i], t2.p[i], report.d1[i],
                    report.d2[i], report.rhs[i], report.margin[i]});
      }
    }
  }
  emit(ds, opt);
  return 0;
}

int cmd_chi(const CommonOptions& opt, double e1_kt, double e2_kt,
            std::vector<double> eps_units) {
  if (e1_kt == e2_kt) {
    std::cerr << "chi: --e1 and --e2 must differ\n";
    return kExitUsage;
  }
  for (double e : eps_units) {
    if (!(e >= 0.0 && e <= 1.0)) {
      std::cerr << "chi: --eps takes fractions of eps_max in [0, 1]\n";
      return kExitUsage;
    }
  }
  if (eps_units.empty()) eps_units = {0.0};
  const double beta = opt.beta;
  const auto h1 = dot_hamiltonian(e1_kt / beta);
  const auto h2 = dot_hamiltonian(e2_kt / beta);
  const double delta = std::abs(e2_kt - e1_kt) / beta;
  auto ds = make_dataset("chi", opt);
  ds.add_meta("e1_over_kT", e1_kt);
  ds.add_meta("e2_over_kT", e2_kt);
  ds.set_columns(
      {"eps_over_eps_max", "chi", "chi_upper", "time_bound_over_tau_pl"});
  for (double eu : eps_units) {
    if (eu < 0.0 || eu > 2.0) {
      std::cerr << "chi: --eps values must lie in [0, 2] (eps_max units)\n";
      return kExitUsage;
    }
    const double eps = eu * planckian::kEpsilonMax;
    const double chi = planckian::pairwise_chi(h1, h2, beta, eps);
    ds.add_row({eu, chi, planckian::chi_upper(delta, eps, beta), chi});
  }
  emit(ds, opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planckian thermalization-time bounds and resonant-level dynamics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonOptions opt;
  std::vector<double> eps_units;
  std::vector<double> p0_list;
  std::vector<double> e1_list, e2_list;
  double e1 = 0.0, e2 = 1.0, p0 = 0.5;
  double a = 1.0, b_units = 0.01, tmax_units = 1.0;
  int pstar_grid = 199, grid = 0;
  bool surface = false;

  auto* fig_bounds = app.add_subcommand("fig-bounds",
                                        "Optimized lower-bound curves chi(p*, eps)");
  add_common(fig_bounds, &opt);
  fig_bounds->add_option("--eps", eps_units, "Errors in eps_max units (repeatable)");
  fig_bounds->add_option("--pstar-grid", pstar_grid, "Number of interior p* points")
      ->check(CLI::PositiveNumber);

  auto* fig_qfi = app.add_subcommand("fig-qfi", "Locally-exact bound curves over p");
  add_common(fig_qfi, &opt);
  grid = 199;
  fig_qfi->add_option("--grid", grid, "Number of interior p points")
      ->check(CLI::PositiveNumber);

  auto* tradeoff = app.add_subcommand("tradeoff",
                                      "Accuracy-generality tradeoff at p* = 1/2");
  add_common(tradeoff, &opt);
  int tradeoff_grid = 50;
  tradeoff->add_option("--grid", tradeoff_grid, "Number of eps points")
      ->check(CLI::Range(2, 100000));

  auto* rlm_constant = app.add_subcommand(
      "rlm-constant", "Constant-coupling machine: times, bounds, steady surface");
  add_common(rlm_constant, &opt);
  int rc_grid = 20;
  rlm_constant->add_option("--eps", eps_units, "Errors in eps_max units (repeatable)");
  rlm_constant->add_option("--e1", e1, "First dot energy in k_B T");
  rlm_constant->add_option("--e2", e2, "Second dot energy in k_B T");
  rlm_constant->add_option("--p0", p0, "Initial occupation");
  rlm_constant->add_option("--grid", rc_grid, "Coupling-grid size")
      ->check(CLI::Range(2, 100000));
  rlm_constant->add_flag("--surface", surface,
                         "Emit the (E, g) steady-state distance surface instead");

  auto* rlm_decaying = app.add_subcommand(
      "rlm-decaying", "Decaying-coupling trajectories and forbidden-region margins");
  add_common(rlm_decaying, &opt);
  int rd_grid = 200;
  rlm_decaying->add_option("--a", a, "Decay strength")->check(CLI::PositiveNumber);
  rlm_decaying->add_option("--b", b_units, "Decay offset in tau_Pl units")
      ->check(CLI::PositiveNumber);
  rlm_decaying->add_option("--p0", p0_list, "Initial occupations (repeatable)");
  rlm_decaying->add_option("--e1", e1_list, "First dot energies in k_B T (repeatable)");
  rlm_decaying->add_option("--e2", e2_list, "Second dot energies in k_B T (repeatable)");
  rlm_decaying->add_option("--tmax", tmax_units, "Horizon in tau_Pl units")
      ->check(CLI::PositiveNumber);
  rlm_decaying->add_option("--grid", rd_grid, "Number of time steps")
      ->check(CLI::Range(1, 1000000));

  auto* chi = app.add_subcommand("chi", "Pairwise bound for a diagonal qubit pair");
  add_common(chi, &opt);
  chi->add_option("--e1", e1, "First dot energy in k_B T");
  chi->add_option("--e2", e2, "Second dot energy in k_B T");
  chi->add_option("--eps", eps_units, "Errors in eps_max units (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (fig_bounds->parsed()) return cmd_fig_bounds(opt, eps_units, pstar_grid);
    if (fig_qfi->parsed()) return cmd_fig_qfi(opt, grid);
    if (tradeoff->parsed()) return cmd_tradeoff(opt, tradeoff_grid);
    if (rlm_constant->parsed()) {
      return cmd_rlm_constant(opt, eps_units, e1, e2, p0, rc_grid, surface);
    }
    if (rlm_decaying->parsed()) {
      return cmd_rlm_decaying(opt, a, b_units, p0_list, e1_list, e2_list, tmax_units,
                              rd_grid);
    }
    if (chi->parsed()) return cmd_chi(opt, e1, e2, eps_units);
  } catch (const planckian::Error& e) {
    std::cerr << "planckian: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
