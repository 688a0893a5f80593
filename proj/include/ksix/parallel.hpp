#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ksix::par {

// Work estimate below which the OpenMP kernels fall through to plain loops.
// Desk-scale inputs (dims ~20) never cross it; the benchmark sizes do.
inline constexpr std::size_t kMinWork = 1u << 14;

inline bool worth_it(std::size_t work) {
#ifdef _OPENMP
  return work >= kMinWork && omp_get_max_threads() > 1;
#else
  (void)work;
  return false;
#endif
}

}  // namespace ksix::par
