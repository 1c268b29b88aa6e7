#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace cloc {

/// Serial runs are the reference; parallel runs must produce identical results.
enum class Exec { Serial, Parallel };

/// Evaluates fn(i) for i in [0, count) and returns the results in index
/// order. Under Exec::Parallel the indices are scheduled dynamically over
/// OpenMP threads. The first exception (lowest index) is rethrown after the
/// loop.
template <class Result, class Fn>
std::vector<Result> parallel_map(Exec exec, std::size_t count, Fn&& fn) {
  std::vector<Result> out(count);
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
      try {
        out[i] = fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < n; ++i) {
      try {
        out[i] = fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Number of threads an Exec::Parallel region would use.
int parallel_threads();

}  // namespace cloc
