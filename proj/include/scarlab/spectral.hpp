#ifndef SCARLAB_SPECTRAL_HPP
#define SCARLAB_SPECTRAL_HPP

#include "scarlab/basis.hpp"
#include "scarlab/eigensystem.hpp"
#include "scarlab/operators.hpp"

#include <Eigen/Core>

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace scarlab {

/// V|alpha> scaled to unit Euclidean norm; a right eigenvector of H_g with
/// eigenvalue E_alpha.
Eigen::VectorXd right_eigvec(const EigenSystem& eig, const ConstrainedBasis& basis, double g,
                             Index alpha);

/// Row scaling by exp(w - max w) followed by normalization, for any dense
/// vector expression.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> reweight_normalized(
    const Eigen::MatrixBase<Derived>& v, const Eigen::VectorXd& log_weights) {
  using Scalar = typename Derived::Scalar;
  const double shift = log_weights.maxCoeff();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out =
      (v.derived().array() * (log_weights.array() - shift).exp().template cast<Scalar>()).matrix();
  out.normalize();
  return out;
}

/// Eigenvalues of a general real matrix. The matrix is first balanced by
/// exact power-of-two diagonal scaling, then reduced and solved.
Eigen::VectorXcd general_eigenvalues(const Eigen::MatrixXd& matrix);

/// In-place balancing of a square matrix; returns the diagonal scaling D with
/// balanced = D^-1 A D.
Eigen::VectorXd balance(Eigen::MatrixXd& matrix);

struct SpectrumInvariance {
  /// Largest matched distance between the sorted H_g and H_0 spectra (an upper
  /// bound on their Hausdorff distance), over all g.
  double max_distance = 0.0;
  /// Largest |Im E| found in any H_g spectrum.
  double max_imag = 0.0;
  std::vector<double> distance_per_g;
  std::vector<double> imag_per_g;
};

/// Compares the general-eigensolver spectrum of every H_g with the symmetric
/// spectrum of H_0. Throws NumericalError naming g on solver failure.
SpectrumInvariance spectrum_invariance(const ConstrainedBasis& basis, std::span<const double> g_list);

/// |<Z2|alpha>|^2 for every eigenvector.
Eigen::VectorXd scar_overlaps(const EigenSystem& eig, const ConstrainedBasis& basis);

struct ScarLabeling {
  std::vector<Index> scar_indices;  // ascending energy
  std::string rule;
  double spacing = 0.0;    // tower spacing estimate
  double exclusion = 0.0;  // minimum energy separation between picks
  bool ambiguous = false;
  std::vector<Index> ambiguous_picks;

  bool contains(Index alpha) const;
};

/// Selects L+1 tower states. The tower spacing is the energy of the largest
/// Z2 overlap at E > 0; picks are then made greedily by overlap, each pick
/// excluding all states within half a spacing of it. A pick whose runner-up
/// in that window reaches 99% of its overlap is flagged as ambiguous; ties
/// go to the lower |E|.
ScarLabeling identify_scars(const EigenSystem& eig, const ConstrainedBasis& basis);
ScarLabeling identify_scars(const EigenSystem& eig, const ConstrainedBasis& basis,
                            const Eigen::VectorXd& overlaps);

/// Up-spin weight distribution of a right eigenvector, N = 0..L/2.
struct NupDistribution {
  Index alpha = 0;
  double g = 0.0;
  Eigen::VectorXd p;
  double log_z = 0.0;
};

/// Weights of |alpha> grouped by up-spin count, N = 0..L/2.
Eigen::VectorXd nup_weights(const EigenSystem& eig, const ConstrainedBasis& basis, Index alpha);

/// Groups squared components of an arbitrary vector by up-spin count.
template <typename Derived>
Eigen::VectorXd group_by_nup(const ConstrainedBasis& basis, const Eigen::MatrixBase<Derived>& v) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(basis.length() / 2 + 1);
  for (Index m = 0; m < basis.dim(); ++m) out[basis.nup(m)] += std::norm(v[m]);
  return out;
}

/// p_N = e^{2gN} p0_N / Z with the normalization evaluated in the log domain.
NupDistribution p_nup(const EigenSystem& eig, const ConstrainedBasis& basis, double g, Index alpha);
NupDistribution reweight_nup(const Eigen::VectorXd& p0, double g, Index alpha = 0);

}  // namespace scarlab

#endif  // SCARLAB_SPECTRAL_HPP
