#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace leib {

/// Execution policy for the data-parallel sweeps. Every parallel kernel has
/// a serial twin producing bit-identical results; tests compare the two.
enum class Exec { serial, parallel };

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <typename Body>
void parallel_for(std::size_t count, Exec exec, Body&& body) {
#if defined(_OPENMP)
  if (exec == Exec::parallel) {
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace leib
