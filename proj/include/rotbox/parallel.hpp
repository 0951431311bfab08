#ifndef ROTBOX_PARALLEL_HPP
#define ROTBOX_PARALLEL_HPP

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rotbox {

// Execution policy for the data-parallel kernels (boundary sweeps, Monte
// Carlo shards, see-saw restarts, grid oracles).  Every kernel has a serial
// path that produces bitwise-identical results; tests compare the two and
// the bench target times them.
enum class Exec { Serial, Parallel };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Index-parallel loop.  Results must be written to disjoint slots indexed by
// i so that the schedule cannot change the outcome.
template <class F>
void parallel_for(Exec exec, std::int64_t n, F&& body) {
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)exec;
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

}  // namespace rotbox

#endif
