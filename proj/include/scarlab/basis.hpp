#ifndef SCARLAB_BASIS_HPP
#define SCARLAB_BASIS_HPP

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scarlab {

using Index = Eigen::Index;
using Complex = std::complex<double>;

/// Packed spin configuration: bit i is site i, 1 = up.
using Bits = std::uint32_t;

inline constexpr int kMinLength = 4;
inline constexpr int kMaxLength = 24;

/// True when no two cyclically adjacent sites of a ring of `length` sites are
/// both up.
constexpr bool satisfies_blockade(Bits bits, int length) noexcept {
  const Bits mask = (length >= 32) ? ~Bits{0} : ((Bits{1} << length) - 1);
  const Bits rotated = ((bits >> 1) | (bits << (length - 1))) & mask;
  return (bits & rotated) == 0;
}

/// Throws std::invalid_argument unless `length` is even and within
/// [kMinLength, kMaxLength].
void require_valid_length(int length);

class BasisState {
 public:
  /// Throws std::invalid_argument when the bits violate the blockade or do not
  /// fit into `length` sites.
  BasisState(Bits bits, int length);

  Bits bits() const noexcept { return bits_; }
  int length() const noexcept { return length_; }
  int n_up() const noexcept { return n_up_; }
  bool up(int site) const noexcept { return (bits_ >> site) & 1U; }

  /// Binary literal, highest site first: the L=4 state with only site 3 up
  /// prints as "1000".
  std::string to_string() const;

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  Bits bits_;
  int length_;
  int n_up_;
};

int n_up(const BasisState& state) noexcept;

/// The blockade sector that contains both Neel states, ordered by ascending
/// bit pattern. Immutable once built.
class ConstrainedBasis {
 public:
  ConstrainedBasis(int length, std::vector<Bits> sorted_states);

  int length() const noexcept { return length_; }
  Index dim() const noexcept { return static_cast<Index>(states_.size()); }

  Bits bits(Index k) const { return states_[static_cast<std::size_t>(k)]; }
  int nup(Index k) const { return nup_[static_cast<std::size_t>(k)]; }
  BasisState state(Index k) const { return BasisState(bits(k), length_); }

  const std::vector<Bits>& states() const noexcept { return states_; }
  const std::vector<int>& nup() const noexcept { return nup_; }

  std::optional<Index> find(Bits bits) const noexcept;
  /// Throws std::out_of_range when `bits` is not a member.
  Index index(Bits bits) const;

 private:
  int length_;
  std::vector<Bits> states_;
  std::vector<int> nup_;
  // Dense bits -> position table, -1 for non-members. 2^L entries.
  std::vector<std::int32_t> lookup_;
};

ConstrainedBasis enumerate_basis(int length);

/// |0101...> (sites 0, 2, 4, ... up) and |1010...> (odd sites up).
Bits neel_bits(int length);
Bits neel_bar_bits(int length);

struct NeelIndices {
  Index z2;
  Index z2bar;
};

NeelIndices neel_states(const ConstrainedBasis& basis);

}  // namespace scarlab

#endif  // SCARLAB_BASIS_HPP
