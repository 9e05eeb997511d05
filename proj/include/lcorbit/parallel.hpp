#pragma once

namespace lcorbit {

// Selects between the straightforward serial reference implementation of a
// kernel and its OpenMP version. Both produce identical results.
enum class Execution { kSerial, kParallel };

// Worker count for parallel kernels: set_worker_count() if called with a
// positive value, else LC_ORBIT_THREADS, else the OpenMP default.
int worker_count();
void set_worker_count(int workers);

}  // namespace lcorbit
