#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hsg {

namespace detail {
__extension__ typedef __int128 wide_int;
}  // namespace detail

// An exact rational membership degree in [0, 1], kept in lowest terms.
//
// Only order comparisons are needed by the fuzzy calculus (sup-min
// composition is closed over the input values), so there is no arithmetic
// beyond construction. Comparison cross-multiplies in 128 bits and never
// overflows.
class FuzzyValue {
 public:
  constexpr FuzzyValue() = default;

  // Throws InputError unless 0 <= num/den <= 1 and den > 0.
  FuzzyValue(std::int64_t num, std::int64_t den);

  static constexpr FuzzyValue zero() noexcept { return FuzzyValue{}; }
  static constexpr FuzzyValue one() noexcept {
    FuzzyValue v;
    v.num_ = 1;
    return v;
  }

  // Accepts "p/q" or an integer (only 0 and 1 are in range). Surrounding
  // whitespace is ignored.
  static FuzzyValue parse(std::string_view text);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  // "p/q" in lowest terms; 0 and 1 print without a denominator.
  std::string to_string() const;

  friend constexpr bool operator==(FuzzyValue, FuzzyValue) = default;
  friend std::strong_ordering operator<=>(FuzzyValue a, FuzzyValue b) noexcept {
    const auto lhs = static_cast<detail::wide_int>(a.num_) * b.den_;
    const auto rhs = static_cast<detail::wide_int>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend std::ostream& operator<<(std::ostream& os, FuzzyValue v);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace hsg
