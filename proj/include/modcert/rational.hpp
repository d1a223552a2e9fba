#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace modcert {

/// Exact rational number on 64-bit integers. Always stored reduced with a
/// positive denominator, so equality is plain field equality. Intermediate
/// products go through 128-bit arithmetic; overflow of the reduced result
/// throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  double to_double() const;
  std::string to_string() const;  // "5/14", or "3" when integral
  bool is_zero() const { return num_ == 0; }
  bool positive() const { return num_ > 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  long long num_ = 0;
  long long den_ = 1;

  static Rational from_i128(__int128 num, __int128 den);
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace modcert
