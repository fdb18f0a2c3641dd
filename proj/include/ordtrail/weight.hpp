#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

namespace ordtrail {

/// Exact rational edge weight. Strict graphs only hold integers (den == 1);
/// relaxed graphs may hold any positive rational, typically a finite decimal.
class Weight {
 public:
  constexpr Weight() = default;
  constexpr Weight(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Weight(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }
  constexpr bool is_positive() const noexcept { return num_ > 0; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend bool operator==(const Weight&, const Weight&) = default;

  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Accepts `[-]digits[.digits]` or `[-]num/den`. Returns nullopt on any
  /// malformed or overflowing input.
  static std::optional<Weight> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = parse_integer(text.substr(0, slash));
      auto den = parse_integer(text.substr(slash + 1));
      if (!num || !den || *den <= 0) return std::nullopt;
      return Weight(*num, *den);
    }
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
      negative = text.front() == '-';
      text.remove_prefix(1);
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool seen_point = false;
    bool seen_digit = false;
    for (char c : text) {
      if (c == '.') {
        if (seen_point) return std::nullopt;
        seen_point = true;
        continue;
      }
      if (c < '0' || c > '9') return std::nullopt;
      seen_digit = true;
      if (num > (INT64_MAX - 9) / 10) return std::nullopt;
      num = num * 10 + (c - '0');
      if (seen_point) {
        if (den > INT64_MAX / 10) return std::nullopt;
        den *= 10;
      }
    }
    if (!seen_digit) return std::nullopt;
    return Weight(negative ? -num : num, den);
  }

  /// Exact text form: integer, finite decimal, or `num/den`.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    std::int64_t d = den_;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
    const int digits = twos > fives ? twos : fives;
    // scale numerator so the denominator becomes 10^digits
    __int128 scaled = num_;
    for (int k = twos; k < digits; ++k) scaled *= 2;
    for (int k = fives; k < digits; ++k) scaled *= 5;
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string out;
    for (int k = 0; k < digits || scaled > 0; ++k) {
      out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
      scaled /= 10;
      if (k + 1 == digits) out.insert(out.begin(), '.');
    }
    if (out.front() == '.') out.insert(out.begin(), '0');
    if (negative) out.insert(out.begin(), '-');
    return out;
  }

 private:
  static std::optional<std::int64_t> parse_integer(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    if (text.front() == '-') {
      negative = true;
      text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;
    std::int64_t value = 0;
    for (char c : text) {
      if (c < '0' || c > '9') return std::nullopt;
      if (value > (INT64_MAX - 9) / 10) return std::nullopt;
      value = value * 10 + (c - '0');
    }
    return negative ? -value : value;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ordtrail
