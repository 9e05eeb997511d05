#include "lcorbit/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>

namespace lcorbit {

namespace {
std::atomic<int> g_override{0};
}  // namespace

int worker_count() {
  if (const int w = g_override.load(); w > 0) return w;
  if (const char* env = std::getenv("LC_ORBIT_THREADS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return omp_get_max_threads();
}

void set_worker_count(int workers) { g_override.store(workers > 0 ? workers : 0); }

}  // namespace lcorbit
