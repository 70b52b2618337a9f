// Brute-force reference implementations used only by the tests. Everything
// here works in the full 2^L product space and shares no code path with the
// library beyond the ConstrainedBasis state list used for projection.
#ifndef SCARLAB_TESTS_ORACLES_HPP
#define SCARLAB_TESTS_ORACLES_HPP

#include "scarlab/basis.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using scarlab::Bits;
using scarlab::Index;

inline bool cyclic_ok(Bits s, int length) {
  for (int i = 0; i < length; ++i) {
    if (((s >> i) & 1U) && ((s >> ((i + 1) % length)) & 1U)) return false;
  }
  return true;
}

inline std::vector<Bits> filtered_states(int length) {
  std::vector<Bits> out;
  for (Bits s = 0; s < (Bits{1} << length); ++s) {
    if (cyclic_ok(s, length)) out.push_back(s);
  }
  return out;
}

/// Single-site operator embedded at `site` of a 2^L space, site 0 = lowest bit.
inline Eigen::MatrixXd embed(const Eigen::Matrix2d& op, int site, int length) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
  for (int s = length - 1; s >= 0; --s) {
    const Eigen::MatrixXd factor = (s == site) ? Eigen::MatrixXd(op) : Eigen::MatrixXd::Identity(2, 2);
    out = Eigen::kroneckerProduct(out, factor).eval();
  }
  return out;
}

/// Biased PXP Hamiltonian on the full product space from explicit P, sigma+
/// and sigma- matrices. Local basis {|0> = down, |1> = up}.
inline Eigen::MatrixXd full_hamiltonian(int length, double g) {
  Eigen::Matrix2d down_projector;
  down_projector << 1, 0, 0, 0;
  Eigen::Matrix2d raise;  // |1><0|
  raise << 0, 0, 1, 0;
  Eigen::Matrix2d lower;  // |0><1|
  lower << 0, 1, 0, 0;
  const Eigen::Index n = Eigen::Index{1} << length;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < length; ++i) {
    const int left = (i + length - 1) % length;
    const int right = (i + 1) % length;
    const Eigen::MatrixXd flip = std::exp(g) * embed(raise, i, length) + std::exp(-g) * embed(lower, i, length);
    h += embed(down_projector, left, length) * flip * embed(down_projector, right, length);
  }
  return h;
}

/// Rows/columns of the full operator restricted to the listed states.
inline Eigen::MatrixXd project(const Eigen::MatrixXd& full, const std::vector<Bits>& states) {
  const auto d = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd out(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) out(r, c) = full(states[r], states[c]);
  }
  return out;
}

inline Eigen::MatrixXd sector_hamiltonian(const scarlab::ConstrainedBasis& basis, double g) {
  return project(full_hamiltonian(basis.length(), g), basis.states());
}

/// Entropy (bits) of the half chain sites start..start+L/2-1 via the reduced
/// density matrix of the vector embedded in the full product space.
template <typename Vector>
double partial_trace_entropy(const scarlab::ConstrainedBasis& basis, const Vector& v, int start) {
  using C = std::complex<double>;
  const int length = basis.length();
  const int half = length / 2;
  const Eigen::Index da = Eigen::Index{1} << half;
  const Eigen::Index db = Eigen::Index{1} << (length - half);
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(da, db);
  for (Eigen::Index k = 0; k < basis.dim(); ++k) {
    const Bits s = basis.bits(k);
    Bits a = 0;
    Bits b = 0;
    for (int j = 0; j < half; ++j) a |= ((s >> ((start + j) % length)) & 1U) << j;
    for (int j = 0; j < length - half; ++j) b |= ((s >> ((start + half + j) % length)) & 1U) << j;
    psi(a, b) += C(v[k]);
  }
  const Eigen::MatrixXcd rho = psi * psi.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()[i];
    if (p > 1e-14) s -= p * std::log2(p);
  }
  return s;
}

/// e^{-i H t} e_n by dense Pade exponentiation.
inline Eigen::VectorXcd expm_propagate(const Eigen::MatrixXd& h, Eigen::Index initial, double t) {
  const Eigen::MatrixXcd a = std::complex<double>(0.0, -t) * h.cast<std::complex<double>>();
  const Eigen::MatrixXcd u = a.exp();
  return u.col(initial);
}

}  // namespace oracle

#endif  // SCARLAB_TESTS_ORACLES_HPP
