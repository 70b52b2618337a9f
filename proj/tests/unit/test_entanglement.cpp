#include "oracles.hpp"

#include "scarlab/entanglement.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace scarlab;

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

TEST_CASE("product and cat states") {
  const ConstrainedBasis basis = enumerate_basis(8);
  const NeelIndices neel = neel_states(basis);

  Eigen::VectorXd product = Eigen::VectorXd::Zero(basis.dim());
  product[neel.z2bar] = 1.0;
  CHECK(schmidt_entropy(basis, product) < 1e-14);

  Eigen::VectorXd cat = Eigen::VectorXd::Zero(basis.dim());
  cat[neel.z2] = cat[neel.z2bar] = 1.0 / std::sqrt(2.0);
  CHECK(schmidt_entropy(basis, cat) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(schmidt_entropy(basis, cat, CutSpec{1}) == doctest::Approx(1.0).epsilon(1e-12));

  Eigen::VectorXcd phased = cat.cast<Complex>();
  phased[neel.z2] *= Complex(0.0, 1.0);
  CHECK(schmidt_entropy(basis, phased) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("input validation") {
  const ConstrainedBasis basis = enumerate_basis(6);
  const Eigen::VectorXd twice = 2.0 * Eigen::VectorXd::Unit(basis.dim(), 0);
  CHECK_THROWS_AS(schmidt_entropy(basis, twice), std::invalid_argument);
  CHECK_THROWS_AS(schmidt_entropy(basis, Eigen::VectorXd::Unit(basis.dim() + 1, 0)), std::invalid_argument);
}

TEST_CASE("Schmidt route agrees with the full-space partial trace") {
  for (int length = 4; length <= 10; length += 2) {
    const ConstrainedBasis basis = enumerate_basis(length);
    const EigenSystem eig = eigendecompose_h0(basis);
    for (int start : {0, 1}) {
      const CutLayout layout(basis, CutSpec{start});
      for (double g : {-1.0, 0.0, 1.5}) {
        for (Index a = 0; a < eig.dim(); a += std::max<Index>(1, eig.dim() / 9)) {
          CAPTURE(length);
          CAPTURE(start);
          CAPTURE(g);
          CAPTURE(a);
          const Eigen::VectorXd r = right_eigvec(eig, basis, g, a);
          CHECK(schmidt_entropy(layout, r) == doctest::Approx(oracle::partial_trace_entropy(basis, r, start)).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("full sweep at L=8 against the oracle") {
  const ConstrainedBasis basis = enumerate_basis(8);
  const EigenSystem eig = eigendecompose_h0(basis);
  for (double g : {-1.0, 0.0, 1.0}) {
    const std::vector<EntropyRecord> sweep = entropy_sweep(eig, basis, g);
    REQUIRE(sweep.size() == static_cast<std::size_t>(eig.dim()));
    for (const EntropyRecord& rec : sweep) {
      CHECK(rec.g == g);
      CHECK(rec.energy == eig.energies[rec.alpha]);
      const double ref = oracle::partial_trace_entropy(basis, right_eigvec(eig, basis, g, rec.alpha), 0);
      CHECK(std::abs(rec.entropy_bits - ref) < 1e-9);
    }
  }
}

TEST_CASE("entropy bounds") {
  const ConstrainedBasis basis = enumerate_basis(12);
  const EigenSystem eig = eigendecompose_h0(basis);
  const CutLayout layout(basis, CutSpec{});
  for (double g : {-2.0, 0.0, 2.0}) {
    for (const EntropyRecord& rec : entropy_sweep(eig, basis, g)) {
      REQUIRE(rec.entropy_bits >= 0.0);
      REQUIRE(rec.entropy_bits <= layout.max_entropy_bits() + 1e-12);
    }
  }
}

TEST_CASE("scar entanglement at L=12") {
  const ConstrainedBasis basis = enumerate_basis(12);
  const EigenSystem eig = eigendecompose_h0(basis);
  const ScarLabeling scars = identify_scars(eig, basis);

  SUBCASE("g = 0: scars sit below nearby bulk states") {
    const std::vector<EntropyRecord> sweep = entropy_sweep(eig, basis, 0.0);
    int compared = 0;
    for (Index s : scars.scar_indices) {
      std::vector<double> nearby;
      for (Index a = 0; a < eig.dim(); ++a) {
        if (!scars.contains(a) && std::abs(eig.energies[a] - eig.energies[s]) < 0.5) {
          nearby.push_back(sweep[static_cast<std::size_t>(a)].entropy_bits);
        }
      }
      if (nearby.empty()) continue;
      CAPTURE(eig.energies[s]);
      CHECK(sweep[static_cast<std::size_t>(s)].entropy_bits < median(nearby));
      ++compared;
    }
    CHECK(compared >= 9);
  }

  SUBCASE("scars approach one bit as g grows") {
    const std::vector<EntropyRecord> g1 = entropy_sweep(eig, basis, 1.0);
    const std::vector<EntropyRecord> g3 = entropy_sweep(eig, basis, 3.0);
    for (Index s : scars.scar_indices) {
      const auto k = static_cast<std::size_t>(s);
      CHECK(std::abs(g3[k].entropy_bits - 1.0) < std::abs(g1[k].entropy_bits - 1.0));
    }
  }

  SUBCASE("g = -1 has nearly unentangled states") {
    double lowest = 1e9;
    for (const EntropyRecord& rec : entropy_sweep(eig, basis, -1.0)) lowest = std::min(lowest, rec.entropy_bits);
    CHECK(lowest < 0.05);
  }
}

TEST_CASE("shifted cut on a symmetric state") {
  // Translation-invariant state: every cut position gives the same entropy.
  const ConstrainedBasis basis = enumerate_basis(10);
  const EigenSystem eig = eigendecompose_h0(basis);
  const Eigen::VectorXd ground = eig.vector(0);
  const double s0 = schmidt_entropy(basis, ground);
  for (int start = 1; start < 10; ++start) CHECK(schmidt_entropy(basis, ground, CutSpec{start}) == doctest::Approx(s0).epsilon(1e-10));
}
