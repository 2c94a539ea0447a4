#include "seshadri/exact_math.hpp"

#include <stdexcept>
#include <utility>

namespace seshadri {

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  if (n < 2) return n;
  // Start at a power of two that is >= sqrt(n). Newton's iterates then
  // decrease monotonically to floor(sqrt(n)); the first non-decrease marks it.
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt x = BigInt(1) << static_cast<mp_bitcnt_t>((bits + 1) / 2);
  for (;;) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

BigInt ceil_sqrt(const BigInt& n) {
  BigInt s = isqrt(n);
  if (s * s != n) ++s;
  return s;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  const BigInt s = isqrt(n);
  return s * s == n;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("ceil_div: division by zero");
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// ---------------------------------------------------------------------------
// Rat

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rat: zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty component");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char c = s[i];
      const bool sign = (i == 0 && (c == '-' || c == '+') && s.size() > 1);
      if (!sign && (c < '0' || c > '9'))
        throw std::invalid_argument("Rat::parse: malformed integer '" + std::string(s) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
  };
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("Rat::parse: zero denominator");
  return Rat(parse_int(text.substr(0, slash)), std::move(den));
}

std::string Rat::str() const { return num_.get_str() + "/" + den_.get_str(); }

Rat operator+(const Rat& x, const Rat& y) {
  return Rat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rat operator-(const Rat& x, const Rat& y) {
  return Rat(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Rat operator*(const Rat& x, const Rat& y) {
  return Rat(x.num_ * y.num_, x.den_ * y.den_);
}

Rat operator/(const Rat& x, const Rat& y) {
  if (y.num_ == 0) throw std::domain_error("Rat: division by zero");
  return Rat(x.num_ * y.den_, x.den_ * y.num_);
}

Rat operator-(const Rat& x) {
  Rat r = x;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
  const int c = cmp(x.num_ * y.den_, y.num_ * x.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// RadicalBound

RadicalBound::RadicalBound(Rat coef, BigInt radicand)
    : coef_(std::move(coef)), radicand_(std::move(radicand)) {
  if (coef_.sign() < 0) throw std::domain_error("RadicalBound: negative coefficient");
  if (radicand_ < 0) throw std::domain_error("RadicalBound: negative radicand");
}

RadicalBound RadicalBound::from_rational(const Rat& value) { return RadicalBound(value, 1); }

Rat RadicalBound::square() const { return coef_ * coef_ * Rat(radicand_); }

// ---------------------------------------------------------------------------
// Comparisons

namespace {

std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering rat_cmp_sqrt(const Rat& r, const BigInt& n) {
  if (r.sign() < 0) throw std::domain_error("rat_cmp_sqrt: negative rational");
  if (n < 0) throw std::domain_error("rat_cmp_sqrt: negative radicand");
  return to_ordering(cmp(r.num() * r.num(), n * r.den() * r.den()));
}

std::strong_ordering rad_cmp(const RadicalBound& x, const RadicalBound& y) {
  return x.square() <=> y.square();
}

bool sqrt_linear_cmp(const BigInt& p, const BigInt& a, const BigInt& q, const BigInt& b,
                     const BigInt& c, const BigInt& n) {
  if (p <= 0 || a <= 0 || q <= 0 || b <= 0 || c <= 0 || n <= 0)
    throw std::domain_error("sqrt_linear_cmp: arguments must be positive");
  const BigInt d = p * p * a * n - q * q * b * n - c * c;
  if (d < 0) return false;
  return d * d >= 4 * q * q * c * c * b * n;
}

// ---------------------------------------------------------------------------
// Decimal rendering

namespace {

std::string format_scaled(const BigInt& rounded, bool negative, int digits, bool exact,
                          DecimalStyle style) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const BigInt whole = rounded / scale;
  std::string frac = BigInt(rounded % scale).get_str();
  if (static_cast<int>(frac.size()) < digits)
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  if (style == DecimalStyle::compact && exact) {
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  }
  std::string out = (negative && rounded != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0 && !frac.empty()) out += "." + frac;
  return out;
}

void check_digits(int digits) {
  if (digits < 0 || digits > 1000) throw std::invalid_argument("to_decimal: digits out of range");
}

}  // namespace

std::string to_decimal(const Rat& value, int digits, DecimalStyle style) {
  check_digits(digits);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const BigInt scaled = abs(value.num()) * scale;
  const BigInt& q = value.den();
  const BigInt rounded = (2 * scaled + q) / (2 * q);
  const bool exact = (scaled % q) == 0;
  return format_scaled(rounded, value.sign() < 0, digits, exact, style);
}

std::string to_decimal(const RadicalBound& value, int digits, DecimalStyle style) {
  check_digits(digits);
  // value * 10^digits = sqrt(s) / q with s = p^2 * radicand * 10^(2 digits).
  BigInt scale2;
  mpz_ui_pow_ui(scale2.get_mpz_t(), 10, static_cast<unsigned long>(2 * digits));
  const BigInt& p = value.coef().num();
  const BigInt& q = value.coef().den();
  const BigInt s = p * p * value.radicand() * scale2;
  // floor(sqrt(s)/q + 1/2) = floor((sqrt(4s) + q) / 2q) = floor((isqrt(4s) + q) / 2q)
  const BigInt rounded = (isqrt(4 * s) + q) / (2 * q);
  const BigInt root = isqrt(s);
  const bool exact = root * root == s && root % q == 0;
  return format_scaled(rounded, false, digits, exact, style);
}

}  // namespace seshadri
