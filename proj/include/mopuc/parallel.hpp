#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mopuc::par {

// Worker count: MOPUC_THREADS when set to a positive integer, otherwise the
// OpenMP default (1 in serial builds). Read once, cached.
int thread_count();

// Global switch used by tests and the benchmark to force the serial path of
// the same kernels. Defaults to on.
bool enabled();
void set_enabled(bool on);

// Evaluate f(i) for i in [0, n). Iterations must be independent; results must
// be written to disjoint slots so reductions can run serially afterwards in
// index order, which keeps outputs identical across thread counts.
template <class F>
void for_each_index(std::size_t n, F&& f) {
#ifdef _OPENMP
  if (enabled() && n >= 2 && thread_count() > 1) {
    std::exception_ptr err = nullptr;
    std::mutex err_mutex;
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
        const std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace mopuc::par
