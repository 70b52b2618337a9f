#include "scarlab/eigensystem.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace scarlab {

EigenSystem eigendecompose_symmetric(const Eigen::MatrixXd& matrix) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ZeroModeBlock zero_mode_block(const EigenSystem& eig, double tol) {
  ZeroModeBlock block;
  Index k = 0;
  while (k < eig.dim() && eig.energies[k] <= -tol) ++k;
  block.first = k;
  while (k < eig.dim() && std::abs(eig.energies[k]) < tol) ++k;
  block.last = k;
  return block;
}

namespace {

// Replace the columns of `modes` by an orthonormal basis of the same span
// whose first column is the normalized projection of unit vector e_target.
void align_with_target(Eigen::Ref<Eigen::MatrixXd> modes, Index target) {
  const Eigen::VectorXd coeffs = modes.row(target).transpose();
  const double norm = coeffs.norm();
  if (norm == 0.0) return;
  const Eigen::VectorXd v = coeffs / norm;

  // Householder reflector R with R e_0 = v; its columns form the new basis.
  Eigen::VectorXd u = -v;
  u[0] += 1.0;
  const double un = u.squaredNorm();
  Eigen::MatrixXd rotation = Eigen::MatrixXd::Identity(v.size(), v.size());
  if (un > 1e-30) rotation -= (2.0 / un) * u * u.transpose();
  modes = (modes * rotation).eval();
}

}  // namespace

EigenSystem eigendecompose_h0(const ConstrainedBasis& basis) {
  const OperatorMatrix h0 = build_h(basis, {basis.length(), 0.0});
  EigenSystem eig = eigendecompose_symmetric(h0.dense());

  const ZeroModeBlock zero = zero_mode_block(eig);
  if (zero.size() > 1) {
    align_with_target(eig.vectors.middleCols(zero.first, zero.size()), neel_states(basis).z2);
  }
  return eig;
}

double reconstruction_residual(const OperatorMatrix& h, const EigenSystem& eig) {
  const Eigen::MatrixXd hu = h.matrix * eig.vectors;
  return (hu - eig.vectors * eig.energies.asDiagonal()).cwiseAbs().maxCoeff();
}

double orthonormality_residual(const EigenSystem& eig) {
  const Eigen::MatrixXd gram = eig.vectors.transpose() * eig.vectors;
  return (gram - Eigen::MatrixXd::Identity(eig.dim(), eig.dim())).cwiseAbs().maxCoeff();
}

}  // namespace scarlab
