#ifndef SCARLAB_EVOLUTION_HPP
#define SCARLAB_EVOLUTION_HPP

#include "scarlab/basis.hpp"
#include "scarlab/eigensystem.hpp"
#include "scarlab/operators.hpp"

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace scarlab {

inline constexpr double kDefaultTimeMax = 40.0;
inline constexpr double kDefaultTimeStep = 0.02;

/// t_k = k * step for k = 0 .. floor(t_max / step). Throws on non-positive or
/// non-finite arguments.
std::vector<double> make_time_grid(double t_max, double step);

/// Néel-projected observables of e^{-i H_g t}|n>. Amplitudes are
/// unnormalized; probabilities are |amp|^2 / <psi|psi>.
struct EvolutionTrace {
  double g = 0.0;
  Index initial = 0;
  Eigen::VectorXd times;
  Eigen::VectorXcd amp_z2;
  Eigen::VectorXcd amp_z2bar;
  Eigen::VectorXd log_norm_sq;
  Eigen::VectorXd p_z2;
  Eigen::VectorXd p_z2bar;

  Index size() const noexcept { return times.size(); }
  Eigen::VectorXd p_neel() const { return p_z2 + p_z2bar; }
};

/// Exact route: <m|e^{-i H_g t}|n> = e^{g(N_m - N_n)} <m|e^{-i H_0 t}|n>,
/// with the Hermitian propagator assembled from `eig` and the squared norm
/// accumulated as a shifted log-sum-exp.
EvolutionTrace evolve_similarity(const ConstrainedBasis& basis, const EigenSystem& eig, double g,
                                 Index initial, std::span<const double> times);

/// Same, starting from |Z2bar>.
EvolutionTrace evolve_similarity(const ConstrainedBasis& basis, const EigenSystem& eig, double g,
                                 std::span<const double> times);

/// Full Hermitian-propagated state U e^{-iEt} U^T e_n as a complex vector.
Eigen::VectorXcd hermitian_propagate(const EigenSystem& eig, Index initial, double t);

/// Direct integration of d psi/dt = -i H psi with an adaptive Dormand-Prince
/// 5(4) pair. The state is renormalized on a sub-grid short enough that a
/// single interval cannot overflow; the discarded norm is carried in
/// log_norm_sq. Throws NumericalError when the step controller gives up.
EvolutionTrace evolve_direct(const ConstrainedBasis& basis, const OperatorMatrix& h, double g,
                             Index initial, std::span<const double> times, double rtol);

EvolutionTrace evolve_direct(const ConstrainedBasis& basis, double g, Index initial,
                             std::span<const double> times, double rtol);

/// Terms e^{2g(N_m - N_n)} |<m|e^{-i H_0 t}|n>|^2 of the squared norm of
/// e^{-i H_g t}|n>, stored as exp(log_shift) * scaled[m] with max scaled = 1.
/// For n = Z2bar the prefactor is e^{-g(L - 2 N_m)}.
struct NormDecomposition {
  double log_shift = 0.0;
  Eigen::VectorXd scaled;

  double log_sum() const;
  double sum() const { return std::exp(log_sum()); }
  Eigen::VectorXd terms() const { return std::exp(log_shift) * scaled; }
};

NormDecomposition norm_decomposition(const ConstrainedBasis& basis, const EigenSystem& eig, double g,
                                     Index initial, double t);

NormDecomposition norm_decomposition(const ConstrainedBasis& basis, const EigenSystem& eig, double g,
                                     double t);

/// Local maxima of `signal` (strictly greater than the left neighbour, not
/// smaller than the right) whose value is at least `min_height`. t = 0 is
/// never reported.
std::vector<Index> revival_peaks(const Eigen::VectorXd& signal, double min_height);

}  // namespace scarlab

#endif  // SCARLAB_EVOLUTION_HPP
