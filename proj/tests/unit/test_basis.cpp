#include "oracles.hpp"

#include "scarlab/basis.hpp"

#include <doctest.h>

#include <bit>
#include <set>
#include <stdexcept>

using namespace scarlab;

TEST_CASE("L=4 sector is the seven states of the Néel-connected graph") {
  const ConstrainedBasis basis = enumerate_basis(4);
  CHECK(basis.dim() == 7);
  const std::vector<Bits> expected{0b0000, 0b0001, 0b0010, 0b0100, 0b0101, 0b1000, 0b1010};
  CHECK(basis.states() == expected);

  const NeelIndices neel = neel_states(basis);
  CHECK(neel.z2 != neel.z2bar);
  CHECK(basis.state(neel.z2).to_string() == "0101");
  CHECK(basis.state(neel.z2bar).to_string() == "1010");
}

TEST_CASE("dimensions match the brute-force filter") {
  // Frozen from oracle::filtered_states.
  CHECK(enumerate_basis(8).dim() == 47);
  CHECK(enumerate_basis(16).dim() == 2207);
  CHECK(oracle::filtered_states(8).size() == 47);
  CHECK(oracle::filtered_states(16).size() == 2207);

  for (int length = 4; length <= 16; length += 2) {
    CAPTURE(length);
    const ConstrainedBasis basis = enumerate_basis(length);
    CHECK(basis.states() == oracle::filtered_states(length));
  }
}

TEST_CASE("dimension is the Lucas number") {
  long long a = 2, b = 1;  // L_0, L_1
  for (int n = 2; n <= 24; ++n) {
    const long long next = a + b;
    a = b;
    b = next;
    if (n % 2 == 0 && n >= 4) CHECK(enumerate_basis(n).dim() == b);
  }
}

TEST_CASE("index and up-spin count invariants") {
  for (int length : {4, 10, 14}) {
    const ConstrainedBasis basis = enumerate_basis(length);
    for (Index k = 0; k < basis.dim(); ++k) {
      REQUIRE(basis.index(basis.bits(k)) == k);
      REQUIRE(basis.nup(k) == std::popcount(basis.bits(k)));
      REQUIRE(satisfies_blockade(basis.bits(k), length));
    }
  }
}

TEST_CASE("Néel states") {
  const ConstrainedBasis b6 = enumerate_basis(6);
  const NeelIndices n6 = neel_states(b6);
  CHECK(b6.bits(n6.z2) == 0b010101);
  CHECK(b6.nup(n6.z2) == 3);
  CHECK(b6.bits(n6.z2bar) == 0b101010);

  const ConstrainedBasis b8 = enumerate_basis(8);
  const NeelIndices n8 = neel_states(b8);
  CHECK(b8.nup(n8.z2) == 4);
  CHECK(b8.nup(n8.z2bar) == 4);
}

TEST_CASE("n_up") {
  CHECK(n_up(BasisState(0b0000, 4)) == 0);
  CHECK(n_up(BasisState(0b1010, 4)) == 2);
  CHECK(n_up(BasisState(0b1000, 4)) == 1);
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(enumerate_basis(5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis(2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis(26), std::invalid_argument);
  CHECK_THROWS_AS(BasisState(0b0011, 4), std::invalid_argument);
  CHECK_THROWS_AS(BasisState(0b1001, 4), std::invalid_argument);  // wraps around the ring
  CHECK_THROWS_AS(BasisState(0b10000, 4), std::invalid_argument);

  const ConstrainedBasis basis = enumerate_basis(6);
  CHECK_FALSE(basis.find(0b000011).has_value());
  CHECK_THROWS_AS(basis.index(0b100001), std::out_of_range);
}
