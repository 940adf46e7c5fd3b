#pragma once

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace icsheaf {

// Per-cell work is independent, so the heavy loops run either serially
// (the reference path) or across OpenMP threads. Both write into
// preallocated slots, so results are identical.
enum class Exec { serial, parallel };

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class F>
void for_each_index(int n, Exec exec, F&& f) {
  if (exec == Exec::serial || n < 2) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
#pragma omp critical(icsheaf_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace icsheaf
