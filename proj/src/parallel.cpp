#include "planckian/parallel.hpp"

#include <atomic>
#include <exception>

#ifdef PLANCKIAN_HAVE_OPENMP
#include <omp.h>
#endif

namespace planckian {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel_enabled(bool enabled) { g_parallel.store(enabled); }
bool parallel_enabled() { return g_parallel.load(); }

namespace detail {

void parallel_for_impl(std::ptrdiff_t n, void* ctx, void (*body)(void*, std::ptrdiff_t)) {
#ifdef PLANCKIAN_HAVE_OPENMP
  if (g_parallel.load() && n > 1) {
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        body(ctx, i);
      } catch (...) {
#pragma omp critical(planckian_parallel_error)
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) body(ctx, i);
}

}  // namespace detail

}  // namespace planckian
