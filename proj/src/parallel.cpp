#include "pcf/parallel.hpp"


namespace pcf {

namespace {
int defaultThreads() {
#ifdef _OPENMP
  return omp_get_num_procs();
#else
  return 1;
#endif
}
}  // namespace

void setThreadCount(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n > 0 ? n : defaultThreads());
#else
  (void)n;
#endif
}

int threadCount() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace pcf
