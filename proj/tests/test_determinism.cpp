#include <doctest.h>

#include <vector>

#include "planckian/chi_bound.hpp"
#include "planckian/dataset.hpp"
#include "planckian/parallel.hpp"
#include "planckian/rlm.hpp"

using namespace planckian;

namespace {

struct SerialGuard {
  explicit SerialGuard(bool serial) { set_parallel_enabled(!serial); }
  ~SerialGuard() { set_parallel_enabled(true); }
};

std::vector<double> chi_sweep() {
  std::vector<double> out(17);
  parallel_for(static_cast<std::ptrdiff_t>(out.size()), [&](std::ptrdiff_t i) {
    out[i] = chi_lower_optimized((i + 1.0) / (out.size() + 1.0), 0.08).value;
  });
  return out;
}

Trajectory trajectory() {
  RlmConfig cfg;
  cfg.e_s = 1.0;
  cfg.beta = 1.0;
  cfg.p0 = 1.0;
  cfg.schedule = CouplingSchedule::decaying(1.0, 0.01);
  std::vector<double> times;
  for (int i = 0; i <= 40; ++i) times.push_back(0.8 * i / 40);
  return rlm_trajectory(cfg, times);
}

}  // namespace

TEST_CASE("parallel kernels reproduce the serial reference bit-for-bit") {
  std::vector<double> serial_chi, parallel_chi;
  Trajectory serial_traj, parallel_traj;
  {
    SerialGuard g(true);
    serial_chi = chi_sweep();
    serial_traj = trajectory();
  }
  {
    SerialGuard g(false);
    parallel_chi = chi_sweep();
    parallel_traj = trajectory();
  }
  CHECK(serial_chi == parallel_chi);
  CHECK(serial_traj.p == parallel_traj.p);
  CHECK(serial_traj.d_to_thermal == parallel_traj.d_to_thermal);

  Vector lv(2);
  lv << 0.0, 1.0;
  BoundQuery q{HermitianOperator::diagonal(lv), 1.0, 0.01, 0.0};
  double serial_bf, parallel_bf;
  {
    SerialGuard g(true);
    serial_bf = chi_exact_bruteforce(q, 50, 3).value;
  }
  {
    SerialGuard g(false);
    parallel_bf = chi_exact_bruteforce(q, 50, 3).value;
  }
  CHECK(serial_bf == parallel_bf);
}

TEST_CASE("dataset serialization is byte-identical across runs") {
  auto build = [] {
    Dataset ds;
    ds.add_meta("command", "demo");
    ds.add_meta("beta", 1.0);
    ds.set_columns({"t", "p", "label"});
    auto traj = trajectory();
    for (size_t i = 0; i < traj.times.size(); ++i) {
      ds.add_row({traj.times[i], traj.p[i], "ok"});
    }
    return ds;
  };
  const Dataset a = build();
  const Dataset b = build();
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_csv().substr(0, 1) == "#");
}
