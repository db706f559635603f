#pragma once

// Scalar types shared by every module.
//
//   ExactInteger / ExactRational  GMP integers and rationals (gmpxx).
//   BigReal                       an MPFR value carrying its own precision.
//   PrecisionContext              the bit budget handed to every numeric routine.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace jensen {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

struct PrecisionContext {
  long bits = 192;        // target mantissa precision
  long guard_bits = 32;   // extra bits carried internally
  long max_terms = 200000;  // series truncation cap

  long working_bits() const { return bits + guard_bits; }
  PrecisionContext with_bits(long b) const {
    PrecisionContext c = *this;
    c.bits = b;
    return c;
  }
  // Throws DomainError when the invariants (bits >= 64, guard >= 32) fail.
  void validate() const;
};

class BigReal {
 public:
  explicit BigReal(long prec = 128);
  BigReal(long value, long prec);
  BigReal(int value, long prec) : BigReal(static_cast<long>(value), prec) {}
  BigReal(double value, long prec);
  BigReal(const ExactInteger& value, long prec);
  BigReal(const ExactRational& value, long prec);

  // Decimal (or "p/q") string.
  static BigReal parse(std::string_view text, long prec);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  long prec() const { return static_cast<long>(mpfr_get_prec(value_)); }
  // Rounds to the new precision in place.
  void set_prec(long prec);
  BigReal rounded(long prec) const;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  friend BigReal operator+(BigReal lhs, long rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, long rhs) { return lhs -= rhs; }
  friend BigReal operator+(long lhs, BigReal rhs) { return rhs += lhs; }
  friend BigReal operator-(long lhs, const BigReal& rhs) { return -rhs + lhs; }
  friend BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }
  BigReal operator-() const;

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, double b);
  friend bool operator==(const BigReal& a, double b) { return mpfr_cmp_d(a.value_, b) == 0; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Base-2 exponent e with 0.5 <= |x| / 2^e < 1 (0 for zero).
  long exponent2() const;

  // Up to `digits` significant decimal digits, trailing zeros stripped;
  // fixed notation for moderate exponents, d.ddde+N otherwise.
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long y);
BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);
BigReal pi(long prec);
// Gamma function (MPFR); DomainError at poles.
BigReal gamma_fn(const BigReal& x);
// |a - b| / max(|b|, tiny); |a - b| when b == 0.
BigReal relative_difference(const BigReal& a, const BigReal& b);

// Exact rational helpers.
ExactRational binomial(const ExactRational& top, long k);  // generalized, k >= 0
ExactInteger binomial(long n, long k);                       // 0 outside 0 <= k <= n
ExactInteger factorial(long n);
std::string to_string(const ExactRational& q);  // "p" or "p/q"
ExactRational parse_rational(std::string_view text);  // "p", "p/q" or a decimal "1.25"

}  // namespace jensen
