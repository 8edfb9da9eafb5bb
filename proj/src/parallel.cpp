#include "mopuc/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace mopuc::par {

namespace {

int resolve_thread_count() {
  if (const char* env = std::getenv("MOPUC_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
      // fall through to the default on unparsable values
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::atomic<bool> g_enabled{true};

}  // namespace

int thread_count() {
  static const int n = resolve_thread_count();
  return n;
}

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

}  // namespace mopuc::par
