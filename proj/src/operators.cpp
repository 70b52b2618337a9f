#include "scarlab/operators.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace scarlab {

OperatorMatrix build_h(const ConstrainedBasis& basis, const ModelParams& params) {
  if (basis.length() != params.length) {
    throw std::invalid_argument("basis length " + std::to_string(basis.length()) +
                                " does not match model length " + std::to_string(params.length));
  }
  if (!std::isfinite(params.g)) throw std::invalid_argument("g must be finite");

  const int length = basis.length();
  const double raise = std::exp(params.g);
  const double lower = std::exp(-params.g);

  std::vector<Eigen::Triplet<double, Index>> entries;
  entries.reserve(static_cast<std::size_t>(basis.dim()) * static_cast<std::size_t>(length) / 2);
  for (Index n = 0; n < basis.dim(); ++n) {
    const Bits s = basis.bits(n);
    for (int site = 0; site < length; ++site) {
      const int left = (site + length - 1) % length;
      const int right = (site + 1) % length;
      if (((s >> left) & 1U) || ((s >> right) & 1U)) continue;
      const Bits flipped = s ^ (Bits{1} << site);
      const Index m = basis.index(flipped);
      entries.emplace_back(m, n, ((s >> site) & 1U) ? lower : raise);
    }
  }

  OperatorMatrix op;
  op.kind = OperatorKind::hamiltonian;
  op.matrix.resize(basis.dim(), basis.dim());
  op.matrix.setFromTriplets(entries.begin(), entries.end());
  op.matrix.makeCompressed();
  return op;
}

DiagonalWeight build_v(const ConstrainedBasis& basis, double g) {
  DiagonalWeight w;
  w.g = g;
  w.log_weights.resize(basis.dim());
  for (Index k = 0; k < basis.dim(); ++k) w.log_weights[k] = g * basis.nup(k);
  return w;
}

OperatorMatrix as_operator(const DiagonalWeight& weight) {
  OperatorMatrix op;
  op.kind = OperatorKind::diagonal;
  op.matrix.resize(weight.dim(), weight.dim());
  std::vector<Eigen::Triplet<double, Index>> entries;
  entries.reserve(static_cast<std::size_t>(weight.dim()));
  for (Index k = 0; k < weight.dim(); ++k) entries.emplace_back(k, k, std::exp(weight.log_weights[k]));
  op.matrix.setFromTriplets(entries.begin(), entries.end());
  return op;
}

SimilarityCheck check_similarity(const ConstrainedBasis& basis, double g, double tol) {
  return check_similarity(basis, g, build_h(basis, {basis.length(), g}), tol);
}

SimilarityCheck check_similarity(const ConstrainedBasis& basis, double g, const OperatorMatrix& h_g,
                                 double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (h_g.dim() != basis.dim()) throw std::invalid_argument("operator does not match basis");

  const OperatorMatrix h0 = build_h(basis, {basis.length(), 0.0});
  SparseMatrix conjugated = h0.matrix;
  for (Index col = 0; col < conjugated.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(conjugated, col); it; ++it) {
      it.valueRef() *= std::exp(g * (basis.nup(it.row()) - basis.nup(col)));
    }
  }
  const SparseMatrix diff = conjugated - h_g.matrix;

  SimilarityCheck check;
  check.tolerance = tol;
  for (Index k = 0; k < diff.nonZeros(); ++k) {
    check.residual = std::max(check.residual, std::abs(diff.valuePtr()[k]));
  }
  return check;
}

void write_coordinate(std::ostream& out, const OperatorMatrix& op) {
  char buf[64];
  for (Index col = 0; col < op.matrix.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(op.matrix, col); it; ++it) {
      std::snprintf(buf, sizeof buf, "%.17g", it.value());
      out << it.row() << ' ' << col << ' ' << buf << '\n';
    }
  }
}

}  // namespace scarlab
