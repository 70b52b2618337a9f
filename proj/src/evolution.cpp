#include "scarlab/evolution.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace scarlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr Index kTimeChunk = 128;

void require_initial(const ConstrainedBasis& basis, Index initial) {
  if (initial < 0 || initial >= basis.dim()) {
    throw std::out_of_range("initial basis index " + std::to_string(initial) + " out of range");
  }
}

void require_finite_times(std::span<const double> times) {
  for (double t : times) {
    if (!std::isfinite(t)) throw std::invalid_argument("time grid contains a non-finite value");
  }
}

double log_abs2(Complex z) {
  const double a = std::norm(z);
  return a > 0.0 ? std::log(a) : kNegInf;
}

EvolutionTrace allocate_trace(double g, Index initial, std::span<const double> times) {
  EvolutionTrace trace;
  trace.g = g;
  trace.initial = initial;
  const auto n = static_cast<Index>(times.size());
  trace.times = Eigen::Map<const Eigen::VectorXd>(times.data(), n);
  trace.amp_z2.resize(n);
  trace.amp_z2bar.resize(n);
  trace.log_norm_sq.resize(n);
  trace.p_z2.resize(n);
  trace.p_z2bar.resize(n);
  return trace;
}

}  // namespace

std::vector<double> make_time_grid(double t_max, double step) {
  if (!std::isfinite(t_max) || !std::isfinite(step) || !(t_max > 0.0) || !(step > 0.0)) {
    throw std::invalid_argument("time grid needs finite t_max > 0 and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor(t_max / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k) grid[k] = static_cast<double>(k) * step;
  return grid;
}

Eigen::VectorXcd hermitian_propagate(const EigenSystem& eig, Index initial, double t) {
  const Eigen::VectorXd c = eig.vectors.row(initial).transpose();
  const Eigen::VectorXd re = (eig.energies * t).array().cos() * c.array();
  const Eigen::VectorXd im = -(eig.energies * t).array().sin() * c.array();
  Eigen::VectorXcd psi(eig.dim());
  psi.real() = eig.vectors * re;
  psi.imag() = eig.vectors * im;
  return psi;
}

EvolutionTrace evolve_similarity(const ConstrainedBasis& basis, const EigenSystem& eig, double g,
                                 Index initial, std::span<const double> times) {
  require_initial(basis, initial);
  require_finite_times(times);
  if (!std::isfinite(g)) throw std::invalid_argument("g must be finite");
  if (eig.dim() != basis.dim()) throw std::invalid_argument("eigensystem does not match basis");

  const NeelIndices neel = neel_states(basis);
  const Index dim = basis.dim();
  const int n0 = basis.nup(initial);
  Eigen::VectorXd log_weight(dim);  // 2 g (N_m - N_n)
  for (Index m = 0; m < dim; ++m) log_weight[m] = 2.0 * g * (basis.nup(m) - n0);

  EvolutionTrace trace = allocate_trace(g, initial, times);
  const Eigen::VectorXd c = eig.vectors.row(initial).transpose();
  const auto n_times = static_cast<Index>(times.size());

  for (Index begin = 0; begin < n_times; begin += kTimeChunk) {
    const Index width = std::min(kTimeChunk, n_times - begin);
    Eigen::MatrixXd phase_re(dim, width);
    Eigen::MatrixXd phase_im(dim, width);
    for (Index j = 0; j < width; ++j) {
      const double t = times[static_cast<std::size_t>(begin + j)];
      phase_re.col(j) = (eig.energies * t).array().cos() * c.array();
      phase_im.col(j) = -(eig.energies * t).array().sin() * c.array();
    }
    const Eigen::MatrixXd psi_re = eig.vectors * phase_re;
    const Eigen::MatrixXd psi_im = eig.vectors * phase_im;

    for (Index j = 0; j < width; ++j) {
      const Index k = begin + j;
      double shift = kNegInf;
      Eigen::VectorXd log_terms(dim);
      for (Index m = 0; m < dim; ++m) {
        log_terms[m] = log_weight[m] + log_abs2({psi_re(m, j), psi_im(m, j)});
        shift = std::max(shift, log_terms[m]);
      }
      double acc = 0.0;
      for (Index m = 0; m < dim; ++m) acc += std::exp(log_terms[m] - shift);
      const double log_norm_sq = shift + std::log(acc);

      trace.log_norm_sq[k] = log_norm_sq;
      const Complex z2{psi_re(neel.z2, j), psi_im(neel.z2, j)};
      const Complex z2bar{psi_re(neel.z2bar, j), psi_im(neel.z2bar, j)};
      trace.amp_z2[k] = std::exp(0.5 * log_weight[neel.z2]) * z2;
      trace.amp_z2bar[k] = std::exp(0.5 * log_weight[neel.z2bar]) * z2bar;
      trace.p_z2[k] = std::exp(log_terms[neel.z2] - log_norm_sq);
      trace.p_z2bar[k] = std::exp(log_terms[neel.z2bar] - log_norm_sq);
    }
  }
  return trace;
}

EvolutionTrace evolve_similarity(const ConstrainedBasis& basis, const EigenSystem& eig, double g,
                                 std::span<const double> times) {
  return evolve_similarity(basis, eig, g, neel_states(basis).z2bar, times);
}

EvolutionTrace evolve_direct(const ConstrainedBasis& basis, const OperatorMatrix& h, double g,
                             Index initial, std::span<const double> times, double rtol) {
  namespace odeint = boost::numeric::odeint;
  using State = std::vector<Complex>;

  require_initial(basis, initial);
  require_finite_times(times);
  if (!(rtol > 1e-12 && rtol < 1e-4)) throw std::invalid_argument("rtol must lie in (1e-12, 1e-4)");
  if (h.dim() != basis.dim()) throw std::invalid_argument("operator does not match basis");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < 0.0 || (k > 0 && times[k] < times[k - 1])) {
      throw std::invalid_argument("direct integration needs a non-negative, non-decreasing grid");
    }
  }

  const Index dim = basis.dim();
  const Eigen::SparseMatrix<Complex, Eigen::ColMajor, Index> hc = h.matrix.cast<Complex>();
  const Complex minus_i{0.0, -1.0};
  auto rhs = [&](const State& x, State& dxdt, double /*t*/) {
    Eigen::Map<const Eigen::VectorXcd> xv(x.data(), dim);
    Eigen::Map<Eigen::VectorXcd> dv(dxdt.data(), dim);
    dv.noalias() = minus_i * (hc * xv);
  };

  // Renormalize at least every 1/|H|_1 so one leg grows the norm by at most e.
  double op_norm = 0.0;
  for (Index col = 0; col < h.matrix.outerSize(); ++col) {
    double s = 0.0;
    for (SparseMatrix::InnerIterator it(h.matrix, col); it; ++it) s += std::abs(it.value());
    op_norm = std::max(op_norm, s);
  }
  const double max_leg = op_norm > 0.0 ? 1.0 / op_norm : std::numeric_limits<double>::infinity();

  auto stepper = odeint::make_controlled(rtol * 1e-2, rtol, odeint::runge_kutta_dopri5<State>());
  State psi(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
  psi[static_cast<std::size_t>(initial)] = 1.0;
  double log_norm_sq = 0.0;
  double now = 0.0;
  double dt = std::min(0.01, max_leg);

  const NeelIndices neel = neel_states(basis);
  EvolutionTrace trace = allocate_trace(g, initial, times);

  for (std::size_t k = 0; k < times.size(); ++k) {
    const double target = times[k];
    while (now < target) {
      const double leg_end = std::min(target, now + max_leg);
      try {
        odeint::integrate_adaptive(stepper, rhs, psi, now, leg_end, std::min(dt, leg_end - now));
      } catch (const odeint::odeint_error& e) {
        throw NumericalError("direct integrator step size underflow near t = " +
                             std::to_string(now) + ": " + e.what());
      }
      now = leg_end;
      Eigen::Map<Eigen::VectorXcd> v(psi.data(), dim);
      const double n2 = v.squaredNorm();
      if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw NumericalError("direct integrator lost the state norm near t = " + std::to_string(now));
      }
      log_norm_sq += std::log(n2);
      v /= std::sqrt(n2);
    }
    const double scale = std::exp(0.5 * log_norm_sq);
    trace.log_norm_sq[static_cast<Index>(k)] = log_norm_sq;
    trace.amp_z2[static_cast<Index>(k)] = scale * psi[static_cast<std::size_t>(neel.z2)];
    trace.amp_z2bar[static_cast<Index>(k)] = scale * psi[static_cast<std::size_t>(neel.z2bar)];
    trace.p_z2[static_cast<Index>(k)] = std::norm(psi[static_cast<std::size_t>(neel.z2)]);
    trace.p_z2bar[static_cast<Index>(k)] = std::norm(psi[static_cast<std::size_t>(neel.z2bar)]);
  }
  return trace;
}

EvolutionTrace evolve_direct(const ConstrainedBasis& basis, double g, Index initial,
                             std::span<const double> times, double rtol) {
  return evolve_direct(basis, build_h(basis, {basis.length(), g}), g, initial, times, rtol);
}

double NormDecomposition::log_sum() const { return log_shift + std::log(scaled.sum()); }

NormDecomposition norm_decomposition(const ConstrainedBasis& basis, const EigenSystem& eig, double g,
                                     Index initial, double t) {
  require_initial(basis, initial);
  if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
  const Eigen::VectorXcd psi = hermitian_propagate(eig, initial, t);
  const int n0 = basis.nup(initial);

  Eigen::VectorXd log_terms(basis.dim());
  for (Index m = 0; m < basis.dim(); ++m) {
    log_terms[m] = 2.0 * g * (basis.nup(m) - n0) + log_abs2(psi[m]);
  }
  NormDecomposition out;
  out.log_shift = log_terms.maxCoeff();
  out.scaled = (log_terms.array() - out.log_shift).exp().matrix();
  return out;
}

NormDecomposition norm_decomposition(const ConstrainedBasis& basis, const EigenSystem& eig, double g,
                                     double t) {
  return norm_decomposition(basis, eig, g, neel_states(basis).z2bar, t);
}

std::vector<Index> revival_peaks(const Eigen::VectorXd& signal, double min_height) {
  std::vector<Index> peaks;
  for (Index k = 1; k + 1 < signal.size(); ++k) {
    if (signal[k] > signal[k - 1] && signal[k] >= signal[k + 1] && signal[k] >= min_height) {
      peaks.push_back(k);
    }
  }
  return peaks;
}

}  // namespace scarlab
