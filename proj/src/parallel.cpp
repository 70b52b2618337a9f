#include "scarlab/parallel.hpp"

#include <Eigen/Core>

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scarlab {

int configure_threads_from_env() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("SCARLAB_THREADS")) {
    try {
      const int requested = std::stoi(env);
      if (requested > 0) threads = requested;
    } catch (const std::exception&) {
      // unparsable values leave the default in place
    }
  }
#ifdef _OPENMP
  omp_set_num_threads(threads);
#endif
  Eigen::setNbThreads(threads);
  return threads;
}

}  // namespace scarlab
