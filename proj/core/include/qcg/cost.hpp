#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcg {

/// A natural number extended with infinity. Addition saturates at infinity;
/// overflow between two finite values throws std::overflow_error.
class Cost {
 public:
  using value_type = std::uint64_t;

  constexpr Cost() noexcept = default;
  constexpr explicit Cost(value_type value) : value_(value) {
    if (value == kInfinityRep) throw std::overflow_error("cost value out of range");
  }

  static constexpr Cost infinity() noexcept {
    Cost c;
    c.value_ = kInfinityRep;
    return c;
  }

  constexpr bool is_infinite() const noexcept { return value_ == kInfinityRep; }
  constexpr bool is_finite() const noexcept { return value_ != kInfinityRep; }

  /// Raw value; only meaningful for finite costs.
  constexpr value_type value() const noexcept { return value_; }

  friend constexpr auto operator<=>(Cost, Cost) noexcept = default;

  friend Cost operator+(Cost lhs, Cost rhs) {
    if (lhs.is_infinite() || rhs.is_infinite()) return infinity();
    if (lhs.value_ > kMaxFinite - rhs.value_) throw std::overflow_error("cost sum overflow");
    return Cost(lhs.value_ + rhs.value_);
  }
  Cost& operator+=(Cost rhs) { return *this = *this + rhs; }

  /// Decimal digits, or "inf".
  std::string str() const;

  static constexpr value_type kMaxFinite = std::numeric_limits<value_type>::max() - 1;

 private:
  static constexpr value_type kInfinityRep = std::numeric_limits<value_type>::max();
  value_type value_ = 0;
};

inline constexpr Cost kInfinity = Cost::infinity();

/// One cost per player, indexed by player ordinal.
using CostVector = std::vector<Cost>;

/// Componentwise `lhs <= rhs`. Vectors must have equal length.
bool dominates_weakly(const CostVector& lhs, const CostVector& rhs);

CostVector operator+(const CostVector& lhs, const CostVector& rhs);

/// Social utility: sum of all components (infinite if any is).
Cost utility(const CostVector& costs);

/// "(1,inf,3)"
std::string to_string(const CostVector& costs);

}  // namespace qcg
