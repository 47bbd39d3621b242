#ifndef STWAVE_PARALLEL_HPP
#define STWAVE_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stwave {

/// Execution policy for the data-parallel kernels (matrix assembly,
/// spectral matvecs). Each kernel iterates over independent work items,
/// so the serial and parallel variants produce bitwise identical results;
/// the serial variant is kept as the reference for testing and for the
/// benchmark comparison.
enum class Exec { serial, parallel };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class Body>
void for_index(std::ptrdiff_t count, Exec exec, Body&& body) {
  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      body(i);
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      body(i);
    }
  }
}

}  // namespace stwave

#endif
