#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qcg {

using PlayerId = std::size_t;

inline constexpr std::size_t kMaxPlayers = 31;

/// A subset of at most kMaxPlayers players, stored as a bitmask.
class PlayerSet {
 public:
  constexpr PlayerSet() noexcept = default;
  constexpr explicit PlayerSet(std::uint32_t bits) noexcept : bits_(bits) {}

  static constexpr PlayerSet all(std::size_t num_players) noexcept {
    return PlayerSet(num_players >= 32 ? ~0u : ((1u << num_players) - 1u));
  }

  constexpr bool contains(PlayerId p) const noexcept { return (bits_ >> p) & 1u; }
  constexpr void insert(PlayerId p) noexcept { bits_ |= (1u << p); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint32_t bits() const noexcept { return bits_; }

  constexpr bool is_subset_of(PlayerSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr PlayerSet operator|(PlayerSet o) const noexcept { return PlayerSet(bits_ | o.bits_); }
  constexpr PlayerSet operator&(PlayerSet o) const noexcept { return PlayerSet(bits_ & o.bits_); }
  constexpr PlayerSet complement(std::size_t num_players) const noexcept {
    return PlayerSet(~bits_ & all(num_players).bits_);
  }

  /// Members in increasing order.
  std::vector<PlayerId> members() const {
    std::vector<PlayerId> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<PlayerId>(std::countr_zero(b)));
    return out;
  }

  friend constexpr auto operator<=>(PlayerSet, PlayerSet) noexcept = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace qcg
