#pragma once

// Thin index-parallel execution layer. Every kernel built on top of this has
// two modes: Serial is the reference implementation, Parallel runs the same
// body under OpenMP. Bodies must write only to disjoint, preallocated slots;
// nothing here imposes an ordering, so results must be index-addressed.

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace descent::par {

enum class Mode { Serial, Parallel };

// Parallel when compiled with OpenMP and DESCENT_SERIAL is unset, else Serial.
Mode default_mode();

// Number of workers the Parallel mode would use (1 without OpenMP).
int worker_count();

const char* to_string(Mode m);

// Runs f(i) for i in [0, n). Exceptions thrown by f are collected and the
// first one is rethrown after the loop completes, in both modes.
template <class F>
void for_index(std::size_t n, Mode mode, F&& f) {
#ifdef _OPENMP
  if (mode == Mode::Parallel) {
    std::exception_ptr err;
    std::mutex err_mu;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#else
  (void)mode;
#endif
  std::exception_ptr err;
  for (std::size_t i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace descent::par
