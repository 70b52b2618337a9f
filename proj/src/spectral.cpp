#include "scarlab/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace scarlab {

Eigen::VectorXd right_eigvec(const EigenSystem& eig, const ConstrainedBasis& basis, double g,
                             Index alpha) {
  if (alpha < 0 || alpha >= eig.dim()) throw std::out_of_range("eigenvector index out of range");
  if (g == 0.0) return eig.vectors.col(alpha);
  return reweight_normalized(eig.vectors.col(alpha), build_v(basis, g).log_weights);
}

Eigen::VectorXd balance(Eigen::MatrixXd& a) {
  constexpr double radix = 2.0;
  constexpr double radix_sq = radix * radix;
  const Index n = a.rows();
  Eigen::VectorXd scale = Eigen::VectorXd::Ones(n);
  bool done = false;
  while (!done) {
    done = true;
    for (Index i = 0; i < n; ++i) {
      double c = a.col(i).cwiseAbs().sum() - std::abs(a(i, i));
      double r = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double bound = r / radix;
      while (c < bound) {
        f *= radix;
        c *= radix_sq;
      }
      bound = r * radix;
      while (c > bound) {
        f /= radix;
        c /= radix_sq;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        scale[i] *= f;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
  return scale;
}

Eigen::VectorXcd general_eigenvalues(const Eigen::MatrixXd& matrix) {
  Eigen::MatrixXd balanced = matrix;
  balance(balanced);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(balanced, false);
  if (solver.info() != Eigen::Success) throw NumericalError("general eigensolver did not converge");
  return solver.eigenvalues();
}

namespace {

Eigen::VectorXcd sorted_by_real(Eigen::VectorXcd values) {
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  return values;
}

}  // namespace

SpectrumInvariance spectrum_invariance(const ConstrainedBasis& basis, std::span<const double> g_list) {
  const Eigen::VectorXd reference =
      eigendecompose_symmetric(build_h(basis, {basis.length(), 0.0}).dense()).energies;

  SpectrumInvariance out;
  for (double g : g_list) {
    Eigen::VectorXcd values;
    try {
      values = sorted_by_real(general_eigenvalues(build_h(basis, {basis.length(), g}).dense()));
    } catch (const NumericalError& e) {
      throw NumericalError(std::string(e.what()) + " at g = " + std::to_string(g));
    }
    double distance = 0.0;
    double imag = 0.0;
    for (Index k = 0; k < values.size(); ++k) {
      distance = std::max(distance, std::abs(values[k] - Complex{reference[k], 0.0}));
      imag = std::max(imag, std::abs(values[k].imag()));
    }
    out.distance_per_g.push_back(distance);
    out.imag_per_g.push_back(imag);
    out.max_distance = std::max(out.max_distance, distance);
    out.max_imag = std::max(out.max_imag, imag);
  }
  return out;
}

Eigen::VectorXd scar_overlaps(const EigenSystem& eig, const ConstrainedBasis& basis) {
  return eig.vectors.row(neel_states(basis).z2).transpose().cwiseAbs2();
}

bool ScarLabeling::contains(Index alpha) const {
  return std::binary_search(scar_indices.begin(), scar_indices.end(), alpha);
}

ScarLabeling identify_scars(const EigenSystem& eig, const ConstrainedBasis& basis) {
  return identify_scars(eig, basis, scar_overlaps(eig, basis));
}

ScarLabeling identify_scars(const EigenSystem& eig, const ConstrainedBasis& basis,
                            const Eigen::VectorXd& overlaps) {
  const Index dim = eig.dim();
  const auto wanted = static_cast<std::size_t>(basis.length() + 1);
  const Eigen::VectorXd& energy = eig.energies;

  ScarLabeling labels;
  Index first_tower = -1;
  for (Index k = 0; k < dim; ++k) {
    if (energy[k] > kZeroModeTolerance && (first_tower < 0 || overlaps[k] > overlaps[first_tower])) {
      first_tower = k;
    }
  }
  labels.spacing = first_tower >= 0 ? energy[first_tower] : 0.0;
  labels.exclusion = 0.5 * labels.spacing;

  std::vector<bool> available(static_cast<std::size_t>(dim), true);
  auto better = [&](Index a, Index b) {
    if (overlaps[a] != overlaps[b]) return overlaps[a] > overlaps[b];
    if (std::abs(energy[a]) != std::abs(energy[b])) return std::abs(energy[a]) < std::abs(energy[b]);
    return a < b;
  };

  while (labels.scar_indices.size() < wanted) {
    Index best = -1;
    for (Index k = 0; k < dim; ++k) {
      if (available[static_cast<std::size_t>(k)] && (best < 0 || better(k, best))) best = k;
    }
    if (best < 0) break;

    // Within the exclusion window, near-ties (99%) resolve to the lower |E|.
    Index pick = best;
    bool tie = false;
    for (Index k = 0; k < dim; ++k) {
      if (k == best || !available[static_cast<std::size_t>(k)]) continue;
      if (std::abs(energy[k] - energy[best]) >= labels.exclusion) continue;
      if (overlaps[k] >= 0.99 * overlaps[best]) {
        tie = true;
        if (std::abs(energy[k]) < std::abs(energy[pick]) ||
            (std::abs(energy[k]) == std::abs(energy[pick]) && k < pick)) {
          pick = k;
        }
      }
    }
    if (tie) {
      labels.ambiguous = true;
      labels.ambiguous_picks.push_back(pick);
    }

    labels.scar_indices.push_back(pick);
    for (Index k = 0; k < dim; ++k) {
      if (std::abs(energy[k] - energy[pick]) < labels.exclusion) available[static_cast<std::size_t>(k)] = false;
    }
    available[static_cast<std::size_t>(pick)] = false;
  }
  std::sort(labels.scar_indices.begin(), labels.scar_indices.end());
  std::sort(labels.ambiguous_picks.begin(), labels.ambiguous_picks.end());

  std::ostringstream rule;
  rule.precision(17);
  rule << "greedy max |<Z2|alpha>|^2, L+1 picks, exclusion |dE| < " << labels.exclusion
       << " (half the spacing " << labels.spacing
       << " of the top E>0 overlap), zero modes aligned with Z2, ties within 1% to lower |E|";
  labels.rule = rule.str();
  return labels;
}

Eigen::VectorXd nup_weights(const EigenSystem& eig, const ConstrainedBasis& basis, Index alpha) {
  if (alpha < 0 || alpha >= eig.dim()) throw std::out_of_range("eigenvector index out of range");
  return group_by_nup(basis, eig.vectors.col(alpha));
}

NupDistribution reweight_nup(const Eigen::VectorXd& p0, double g, Index alpha) {
  constexpr double neg_inf = -std::numeric_limits<double>::infinity();
  const Index bins = p0.size();
  // The log terms only pick the dominant bin; the weights themselves are
  // formed as p0 * e^{2g(n - n*)} so each entry sees a single rounded exp.
  Eigen::VectorXd log_terms(bins);
  for (Index n = 0; n < bins; ++n) {
    log_terms[n] = p0[n] > 0.0 ? 2.0 * g * static_cast<double>(n) + std::log(p0[n]) : neg_inf;
  }
  Index top = 0;
  log_terms.maxCoeff(&top);
  Eigen::VectorXd p(bins);
  for (Index n = 0; n < bins; ++n) p[n] = p0[n] * std::exp(2.0 * g * static_cast<double>(n - top));
  const double sum = p.sum();
  p /= sum;

  NupDistribution out;
  out.alpha = alpha;
  out.g = g;
  out.p = std::move(p);
  out.log_z = 2.0 * g * static_cast<double>(top) + std::log(sum);
  return out;
}

NupDistribution p_nup(const EigenSystem& eig, const ConstrainedBasis& basis, double g, Index alpha) {
  return reweight_nup(nup_weights(eig, basis, alpha), g, alpha);
}

}  // namespace scarlab
