#pragma once

// Exact integer and rational arithmetic. Nothing in this header touches
// floating point; decimal strings are produced by integer rounding.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seshadri {

using BigInt = mpz_class;

/// Floor of the square root: the s with s*s <= n < (s+1)*(s+1).
/// Throws std::domain_error for negative n.
BigInt isqrt(const BigInt& n);

/// Smallest s with s*s >= n.
BigInt ceil_sqrt(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// Floor division with the quotient rounded toward negative infinity.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

/// Rational number kept in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt num, BigInt den);
  explicit Rat(BigInt value) : num_(std::move(value)), den_(1) {}

  /// Accepts "p/q" or "p".
  static Rat parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  /// Always "p/q", also for integers ("2/1").
  std::string str() const;

  friend Rat operator+(const Rat& x, const Rat& y);
  friend Rat operator-(const Rat& x, const Rat& y);
  friend Rat operator*(const Rat& x, const Rat& y);
  friend Rat operator/(const Rat& x, const Rat& y);
  friend Rat operator-(const Rat& x);

  friend bool operator==(const Rat& x, const Rat& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& x, const Rat& y);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// The real number coef * sqrt(radicand), with coef >= 0 and radicand >= 0.
class RadicalBound {
 public:
  RadicalBound(Rat coef, BigInt radicand);

  /// A non-negative rational as a radical with radicand 1.
  static RadicalBound from_rational(const Rat& value);

  const Rat& coef() const { return coef_; }
  const BigInt& radicand() const { return radicand_; }

  /// coef^2 * radicand, the exact square of the represented value.
  Rat square() const;

 private:
  Rat coef_;
  BigInt radicand_;
};

/// Exact order of r versus sqrt(n). Requires r >= 0, n >= 0.
std::strong_ordering rat_cmp_sqrt(const Rat& r, const BigInt& n);

/// Exact order of two radicals, decided on their squares.
std::strong_ordering rad_cmp(const RadicalBound& x, const RadicalBound& y);

/// Decides p*sqrt(a*N) >= q*sqrt(b*N) + c exactly. All arguments positive.
///
/// With D = p^2 a N - q^2 b N - c^2 the inequality holds iff D >= 0 and
/// D^2 >= 4 q^2 c^2 b N. The sign test on D comes first, so the second
/// squaring never sees a negative left side.
bool sqrt_linear_cmp(const BigInt& p, const BigInt& a, const BigInt& q,
                     const BigInt& b, const BigInt& c, const BigInt& n);

enum class DecimalStyle {
  /// Drop trailing zeros when the rendering is exact, keep all digits when
  /// rounding happened ("9.3", "3", but "2.2780").
  compact,
  /// Always print exactly `digits` fractional digits.
  full,
};

/// Round-to-nearest, ties away from zero, at `digits` fractional digits.
std::string to_decimal(const Rat& value, int digits,
                       DecimalStyle style = DecimalStyle::compact);
std::string to_decimal(const RadicalBound& value, int digits,
                       DecimalStyle style = DecimalStyle::compact);

inline const char* ordering_name(std::strong_ordering o) {
  if (o < 0) return "less";
  if (o > 0) return "greater";
  return "equal";
}

}  // namespace seshadri
