#include "hsg/fuzzy_value.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "hsg/errors.hpp"

namespace hsg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc{} || ptr != end) {
    throw InputError("not a rational: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

FuzzyValue::FuzzyValue(std::int64_t num, std::int64_t den) {
  if (den <= 0) {
    throw InputError("fuzzy value needs a positive denominator");
  }
  if (num < 0 || num > den) {
    throw InputError("fuzzy value " + std::to_string(num) + "/" +
                     std::to_string(den) + " is outside [0,1]");
  }
  const std::int64_t g = num == 0 ? den : std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

FuzzyValue FuzzyValue::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return {parse_int(t, t), 1};
  return {parse_int(trim(t.substr(0, slash)), t),
          parse_int(trim(t.substr(slash + 1)), t)};
}

std::string FuzzyValue::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, FuzzyValue v) {
  return os << v.to_string();
}

}  // namespace hsg
