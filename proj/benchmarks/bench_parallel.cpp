// Compares the OpenMP work-sharing kernels against the serial reference on
// the two hottest sweeps: optimized lower-bound curves and RLM trajectories.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "planckian/chi_bound.hpp"
#include "planckian/parallel.hpp"
#include "planckian/rlm.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double sweep_chi() {
  std::vector<double> values(64);
  planckian::parallel_for(static_cast<std::ptrdiff_t>(values.size()),
                          [&](std::ptrdiff_t i) {
                            const double p = (i + 1.0) / (values.size() + 1.0);
                            values[i] = planckian::chi_lower_optimized(p, 0.1).value;
                          });
  double sum = 0;
  for (double v : values) sum += v;
  return sum;
}

double sweep_rlm() {
  planckian::RlmConfig cfg;
  cfg.e_s = 1.0;
  cfg.beta = 1.0;
  cfg.p0 = 1.0;
  cfg.schedule = planckian::CouplingSchedule::decaying(1.0, 0.01);
  std::vector<double> times(256);
  for (size_t i = 0; i < times.size(); ++i) times[i] = 1.0 * i / (times.size() - 1);
  auto traj = planckian::rlm_trajectory(cfg, times);
  double sum = 0;
  for (double p : traj.p) sum += p;
  return sum;
}

void report(const char* name, const std::function<double()>& work) {
  planckian::set_parallel_enabled(false);
  double checksum_serial = 0.0;
  const double serial = time_ms([&] { checksum_serial = work(); });
  planckian::set_parallel_enabled(true);
  double checksum_parallel = 0.0;
  const double parallel = time_ms([&] { checksum_parallel = work(); });
  std::printf("%-24s serial %8.1f ms   parallel %8.1f ms   speedup %5.2fx   %s\n", name,
              serial, parallel, serial / parallel,
              checksum_serial == checksum_parallel ? "results identical"
                                                   : "RESULTS DIFFER");
}

}  // namespace

int main() {
  report("chi_lower sweep", sweep_chi);
  report("rlm trajectory", sweep_rlm);
  return 0;
}
