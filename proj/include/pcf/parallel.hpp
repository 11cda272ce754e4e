#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcf {

// Serial is the reference path; Parallel must produce identical output.
enum class Exec { Serial, Parallel };

// Overrides the OpenMP worker count (n <= 0 restores the default).
void setThreadCount(int n);
int threadCount();

// out[i] = fn(i) for i in [0, n), in index order regardless of scheduling.
// The first exception thrown by any worker is rethrown on the caller.
template <class R, class Fn>
std::vector<R> mapIndexed(Exec exec, std::size_t n, Fn&& fn) {
  std::vector<R> out(n);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failureMutex;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failureMutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace pcf
