#include "scarlab/basis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace scarlab {

void require_valid_length(int length) {
  if (length % 2 != 0 || length < kMinLength || length > kMaxLength) {
    throw std::invalid_argument("chain length must be even and in [" + std::to_string(kMinLength) +
                                ", " + std::to_string(kMaxLength) + "], got " +
                                std::to_string(length));
  }
}

BasisState::BasisState(Bits bits, int length) : bits_(bits), length_(length), n_up_(std::popcount(bits)) {
  if (length < 2 || length > 31 || (bits >> length) != 0) {
    throw std::invalid_argument("bit pattern does not fit into the chain");
  }
  if (!satisfies_blockade(bits, length)) {
    throw std::invalid_argument("bit pattern " + to_string() + " has adjacent up spins");
  }
}

std::string BasisState::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int site = 0; site < length_; ++site) {
    if (up(site)) s[static_cast<std::size_t>(length_ - 1 - site)] = '1';
  }
  return s;
}

int n_up(const BasisState& state) noexcept { return state.n_up(); }

ConstrainedBasis::ConstrainedBasis(int length, std::vector<Bits> sorted_states)
    : length_(length), states_(std::move(sorted_states)) {
  require_valid_length(length);
  if (!std::is_sorted(states_.begin(), states_.end())) {
    throw std::invalid_argument("basis states must be sorted");
  }
  nup_.reserve(states_.size());
  lookup_.assign(std::size_t{1} << length, -1);
  for (std::size_t k = 0; k < states_.size(); ++k) {
    const Bits b = states_[k];
    if (!satisfies_blockade(b, length) || (b >> length) != 0) {
      throw std::invalid_argument("basis state violates the blockade");
    }
    nup_.push_back(std::popcount(b));
    lookup_[b] = static_cast<std::int32_t>(k);
  }
}

std::optional<Index> ConstrainedBasis::find(Bits bits) const noexcept {
  if ((bits >> length_) != 0) return std::nullopt;
  const std::int32_t k = lookup_[bits];
  if (k < 0) return std::nullopt;
  return static_cast<Index>(k);
}

Index ConstrainedBasis::index(Bits bits) const {
  if (auto k = find(bits)) return *k;
  throw std::out_of_range("state is not in the constrained basis");
}

namespace {

// Depth-first construction, site by site. `first_up` pins site 0 so the
// wrap-around pair (L-1, 0) can be checked at the last site.
void grow(int site, int length, Bits prefix, bool prev_up, bool first_up, std::vector<Bits>& out) {
  if (site == length) {
    out.push_back(prefix);
    return;
  }
  grow(site + 1, length, prefix, false, first_up, out);
  const bool blocked = prev_up || (site == length - 1 && first_up);
  if (!blocked) grow(site + 1, length, prefix | (Bits{1} << site), true, first_up, out);
}

}  // namespace

ConstrainedBasis enumerate_basis(int length) {
  require_valid_length(length);
  std::vector<Bits> states;
  grow(1, length, 0, false, false, states);
  grow(1, length, 1, true, true, states);
  std::sort(states.begin(), states.end());
  return ConstrainedBasis(length, std::move(states));
}

Bits neel_bits(int length) {
  Bits b = 0;
  for (int site = 0; site < length; site += 2) b |= Bits{1} << site;
  return b;
}

Bits neel_bar_bits(int length) { return neel_bits(length) << 1; }

NeelIndices neel_states(const ConstrainedBasis& basis) {
  return {basis.index(neel_bits(basis.length())), basis.index(neel_bar_bits(basis.length()))};
}

}  // namespace scarlab
