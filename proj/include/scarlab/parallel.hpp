#ifndef SCARLAB_PARALLEL_HPP
#define SCARLAB_PARALLEL_HPP

namespace scarlab {

/// Reads SCARLAB_THREADS (if set to a positive integer) and caps both the
/// OpenMP pool and Eigen's internal threading. Returns the active count.
int configure_threads_from_env();

}  // namespace scarlab

#endif  // SCARLAB_PARALLEL_HPP
