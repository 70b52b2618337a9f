#include "scarlab/entanglement.hpp"

#include <limits>

namespace scarlab {

namespace {

bool open_chain_valid(Bits bits) { return (bits & (bits >> 1)) == 0; }

// Compact positions of blockade-valid open strings of `sites` bits.
std::vector<Index> open_string_positions(int sites, Index& count) {
  std::vector<Index> pos(std::size_t{1} << sites, -1);
  count = 0;
  for (Bits b = 0; b < (Bits{1} << sites); ++b) {
    if (open_chain_valid(b)) pos[b] = count++;
  }
  return pos;
}

}  // namespace

CutLayout::CutLayout(const ConstrainedBasis& basis, CutSpec cut) : cut_(cut) {
  const int length = basis.length();
  const int half = length / 2;
  if (cut.start < 0 || cut.start >= length) {
    throw std::invalid_argument("cut start must lie in [0, L)");
  }
  const std::vector<Index> a_pos = open_string_positions(half, rows_);
  const std::vector<Index> b_pos = open_string_positions(length - half, cols_);

  const Bits full = (Bits{1} << length) - 1;
  const Bits half_mask = (Bits{1} << half) - 1;
  row_.reserve(static_cast<std::size_t>(basis.dim()));
  col_.reserve(static_cast<std::size_t>(basis.dim()));
  for (Index k = 0; k < basis.dim(); ++k) {
    const Bits s = basis.bits(k);
    const Bits rotated =
        cut.start == 0 ? s : ((s >> cut.start) | (s << (length - cut.start))) & full;
    row_.push_back(a_pos[rotated & half_mask]);
    col_.push_back(b_pos[rotated >> half]);
  }
}

double entropy_from_singular_values(const Eigen::VectorXd& singular_values) {
  double s = 0.0;
  for (Index i = 0; i < singular_values.size(); ++i) {
    const double p = singular_values[i] * singular_values[i];
    if (p > kSchmidtCutoff) s -= p * std::log2(p);
  }
  return s;
}

std::vector<EntropyRecord> entropy_sweep(const EigenSystem& eig, const ConstrainedBasis& basis, double g,
                                         CutSpec cut) {
  const CutLayout layout(basis, cut);
  const Eigen::VectorXd log_weights = build_v(basis, g).log_weights;
  std::vector<EntropyRecord> records(static_cast<std::size_t>(eig.dim()));

#pragma omp parallel for schedule(dynamic, 16)
  for (Index alpha = 0; alpha < eig.dim(); ++alpha) {
    EntropyRecord& rec = records[static_cast<std::size_t>(alpha)];
    rec.alpha = alpha;
    rec.energy = eig.energies[alpha];
    rec.g = g;
    const Eigen::VectorXd v =
        g == 0.0 ? Eigen::VectorXd(eig.vectors.col(alpha)) : reweight_normalized(eig.vectors.col(alpha), log_weights);
    try {
      rec.entropy_bits = schmidt_entropy(layout, v);
    } catch (const std::invalid_argument&) {
      rec.entropy_bits = std::numeric_limits<double>::quiet_NaN();
    }
  }
  for (const EntropyRecord& rec : records) {
    if (std::isnan(rec.entropy_bits)) {
      throw std::invalid_argument("entropy failed for eigenvector alpha = " + std::to_string(rec.alpha));
    }
  }
  return records;
}

}  // namespace scarlab
