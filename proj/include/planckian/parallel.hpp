#pragma once

#include <cstddef>

namespace planckian {

/// Globally disable/enable OpenMP work sharing. The serial path is the
/// reference implementation; results are identical either way because
/// every loop body writes to its own preallocated slot.
void set_parallel_enabled(bool enabled);
bool parallel_enabled();

namespace detail {
void parallel_for_impl(std::ptrdiff_t n, void* ctx, void (*body)(void*, std::ptrdiff_t));
}

/// Data-parallel loop over [0, n). Bodies must be independent.
template <typename Fn>
void parallel_for(std::ptrdiff_t n, Fn&& fn) {
  detail::parallel_for_impl(n, &fn, [](void* ctx, std::ptrdiff_t i) {
    (*static_cast<Fn*>(ctx))(i);
  });
}

}  // namespace planckian
