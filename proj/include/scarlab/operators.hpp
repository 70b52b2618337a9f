#ifndef SCARLAB_OPERATORS_HPP
#define SCARLAB_OPERATORS_HPP

#include "scarlab/basis.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <iosfwd>

namespace scarlab {

struct ModelParams {
  int length = 0;
  double g = 0.0;
};

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, Index>;

enum class OperatorKind { hamiltonian, diagonal };

/// Real sparse operator over a constrained basis. Values are real for the
/// whole model family; callers promote to complex where needed.
struct OperatorMatrix {
  OperatorKind kind = OperatorKind::hamiltonian;
  SparseMatrix matrix;

  Index dim() const noexcept { return matrix.rows(); }
  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(matrix); }
};

/// Similarity weight exp(g N_up), kept as g * N_up per basis state.
struct DiagonalWeight {
  double g = 0.0;
  Eigen::VectorXd log_weights;

  Index dim() const noexcept { return log_weights.size(); }
  Eigen::VectorXd weights() const { return log_weights.array().exp().matrix(); }
};

/// Biased PXP Hamiltonian: a flip on site i needs both ring neighbours down;
/// raising carries exp(g), lowering exp(-g). Throws std::invalid_argument on
/// a basis/params length mismatch or non-finite g.
OperatorMatrix build_h(const ConstrainedBasis& basis, const ModelParams& params);

DiagonalWeight build_v(const ConstrainedBasis& basis, double g);

OperatorMatrix as_operator(const DiagonalWeight& weight);

/// Applies exp(scale * log_weights) componentwise, i.e. V^scale v.
template <typename Derived>
auto apply_weight(const DiagonalWeight& weight, const Eigen::MatrixBase<Derived>& v, double scale = 1.0) {
  using Scalar = typename Derived::Scalar;
  return (v.derived().array() * (scale * weight.log_weights.array()).exp().template cast<Scalar>())
      .matrix();
}

struct SimilarityCheck {
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed() const noexcept { return residual < tolerance; }
};

/// max |(V H_0 V^-1 - H_g)_mn| with the conjugation applied entrywise as
/// exp(g (N_m - N_n)). The second overload checks a caller-supplied H_g.
SimilarityCheck check_similarity(const ConstrainedBasis& basis, double g, double tol);
SimilarityCheck check_similarity(const ConstrainedBasis& basis, double g, const OperatorMatrix& h_g,
                                 double tol);

/// One "row col value" line per stored entry, 0-based, 17 significant digits.
void write_coordinate(std::ostream& out, const OperatorMatrix& op);

}  // namespace scarlab

#endif  // SCARLAB_OPERATORS_HPP
