#ifndef SCARLAB_ENTANGLEMENT_HPP
#define SCARLAB_ENTANGLEMENT_HPP

#include "scarlab/basis.hpp"
#include "scarlab/eigensystem.hpp"
#include "scarlab/spectral.hpp"

#include <Eigen/Core>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace scarlab {

/// Half-chain bipartition of the ring: A = sites start .. start + L/2 - 1
/// (mod L), B = the rest.
struct CutSpec {
  int start = 0;
};

/// Squared Schmidt values below this are dropped from the entropy sum.
inline constexpr double kSchmidtCutoff = 1e-14;
inline constexpr double kUnitNormTolerance = 1e-10;

/// Placement of every basis state in the Schmidt coefficient matrix. Rows
/// index blockade-valid open strings on A, columns those on B; pairs whose
/// glued string breaks the blockade at a cut boundary stay exactly zero.
class CutLayout {
 public:
  CutLayout(const ConstrainedBasis& basis, CutSpec cut);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  Index row(Index k) const { return row_[static_cast<std::size_t>(k)]; }
  Index col(Index k) const { return col_[static_cast<std::size_t>(k)]; }
  Index dim() const noexcept { return static_cast<Index>(row_.size()); }
  CutSpec cut() const noexcept { return cut_; }

  /// log2(min(rows, cols)), the largest attainable entropy.
  double max_entropy_bits() const { return std::log2(static_cast<double>(std::min(rows_, cols_))); }

  template <typename Derived>
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> coefficients(
      const Eigen::MatrixBase<Derived>& v) const {
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> m =
        Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(rows_, cols_);
    for (Index k = 0; k < dim(); ++k) m(row(k), col(k)) = v[k];
    return m;
  }

 private:
  CutSpec cut_;
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Index> row_;
  std::vector<Index> col_;
};

/// -sum s^2 log2 s^2 over the squared singular values s^2 > kSchmidtCutoff.
double entropy_from_singular_values(const Eigen::VectorXd& singular_values);

/// Base-2 entanglement entropy of a unit-norm vector over the basis. Throws
/// std::invalid_argument if |v| deviates from 1 by more than 1e-10.
template <typename Derived>
double schmidt_entropy(const CutLayout& layout, const Eigen::MatrixBase<Derived>& v) {
  if (v.size() != layout.dim()) throw std::invalid_argument("vector does not match basis dimension");
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > kUnitNormTolerance) {
    throw std::invalid_argument("schmidt_entropy needs a unit-norm vector, got norm " + std::to_string(norm));
  }
  const auto m = layout.coefficients(v);
  Eigen::BDCSVD<std::decay_t<decltype(m)>> svd(m);
  return entropy_from_singular_values(svd.singularValues());
}

template <typename Derived>
double schmidt_entropy(const ConstrainedBasis& basis, const Eigen::MatrixBase<Derived>& v, CutSpec cut = {}) {
  return schmidt_entropy(CutLayout(basis, cut), v);
}

struct EntropyRecord {
  Index alpha = 0;
  double energy = 0.0;
  double g = 0.0;
  double entropy_bits = 0.0;
};

/// One record per eigenvector, using the unit-normalized right eigenvector
/// V|alpha> at g != 0. Ordered by alpha.
std::vector<EntropyRecord> entropy_sweep(const EigenSystem& eig, const ConstrainedBasis& basis, double g,
                                         CutSpec cut = {});

}  // namespace scarlab

#endif  // SCARLAB_ENTANGLEMENT_HPP
