#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace essence {

// Exact rational scalar used for every arc length, potential and coefficient.
// Always normalized: denominator > 0 and gcd(|num|, den) = 1.
class Weight {
 public:
  Weight() = default;

  template <std::integral T>
  Weight(T value)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<long>(value)) {}

  Weight(long numerator, long denominator);

  // Accepts "-16", "4.5", "9/2" (optionally signed, surrounding blanks
  // ignored). Decimals convert exactly. Throws ParseError.
  static Weight parse(std::string_view text);

  // "p" for integers, "p/q" otherwise.
  std::string str() const;

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  Weight abs() const;

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  Weight& operator*=(const Weight& rhs);
  // Throws DomainError on division by zero.
  Weight& operator/=(const Weight& rhs);

  friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
  friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
  friend Weight operator*(Weight lhs, const Weight& rhs) { return lhs *= rhs; }
  friend Weight operator/(Weight lhs, const Weight& rhs) { return lhs /= rhs; }
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w);

 private:
  explicit Weight(mpq_class q) : value_(std::move(q)) {}

  mpq_class value_;
};

}  // namespace essence
