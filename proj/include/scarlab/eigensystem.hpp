#ifndef SCARLAB_EIGENSYSTEM_HPP
#define SCARLAB_EIGENSYSTEM_HPP

#include "scarlab/basis.hpp"
#include "scarlab/operators.hpp"

#include <Eigen/Core>

#include <stdexcept>

namespace scarlab {

/// Raised when a numerical routine cannot deliver its result (eigensolver
/// non-convergence, integrator step underflow).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spectrum of the Hermitian model: ascending energies, orthonormal columns.
struct EigenSystem {
  Eigen::VectorXd energies;
  Eigen::MatrixXd vectors;

  Index dim() const noexcept { return energies.size(); }
  auto vector(Index alpha) const { return vectors.col(alpha); }
};

/// Energies closer to zero than this are treated as the zero-mode eigenspace.
inline constexpr double kZeroModeTolerance = 1e-8;

/// Dense diagonalization of H_0. Inside the E = 0 eigenspace the basis is
/// rotated so that its first vector is the normalized projection of |Z2>
/// (positive overlap) and all remaining zero modes are orthogonal to |Z2>.
EigenSystem eigendecompose_h0(const ConstrainedBasis& basis);

/// Eigenpairs of an arbitrary real symmetric matrix, ascending.
EigenSystem eigendecompose_symmetric(const Eigen::MatrixXd& matrix);

/// max |H U - U diag(E)| over all entries.
double reconstruction_residual(const OperatorMatrix& h, const EigenSystem& eig);

/// max |U^T U - 1| over all entries.
double orthonormality_residual(const EigenSystem& eig);

/// Half-open range [first, last) of eigenvalue positions with |E| < tol.
struct ZeroModeBlock {
  Index first = 0;
  Index last = 0;
  Index size() const noexcept { return last - first; }
};

ZeroModeBlock zero_mode_block(const EigenSystem& eig, double tol = kZeroModeTolerance);

}  // namespace scarlab

#endif  // SCARLAB_EIGENSYSTEM_HPP
