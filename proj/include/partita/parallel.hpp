#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace partita {

/// Execution policy for the corpus- and kernel-level scans. Serial is the
/// reference path; Parallel distributes loop iterations over OpenMP threads.
/// Both produce identical results: every iteration writes only its own slot.
enum class ExecMode { Serial, Parallel };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs body(i) for i in [0, n). Exceptions thrown by iterations are captured
/// and the first one is rethrown after the loop completes.
template <class F>
void parallel_for(std::size_t n, ExecMode mode, F&& body) {
  std::exception_ptr err = nullptr;
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)n; ++i) {
      try {
        body(std::size_t(i));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  (void)mode;
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace partita
