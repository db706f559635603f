#include "jensen/numeric.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "jensen/errors.hpp"

namespace jensen {

namespace {

mpfr_prec_t clamp_prec(long prec) {
  return static_cast<mpfr_prec_t>(std::max<long>(prec, MPFR_PREC_MIN));
}

long max_prec(const BigReal& a, const BigReal& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

void PrecisionContext::validate() const {
  if (bits < 64) throw DomainError("precision bits must be >= 64");
  if (guard_bits < 32) throw DomainError("guard bits must be >= 32");
  if (max_terms < 1) throw DomainError("max_terms must be positive");
}

BigReal::BigReal(long prec) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, long prec) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, long prec) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const ExactInteger& value, long prec) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const ExactRational& value, long prec) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::parse(std::string_view text, long prec) {
  std::string s(text);
  if (s.find('/') != std::string::npos) return BigReal(parse_rational(s), prec);
  BigReal r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') throw DomainError("not a number: '" + s + "'");
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

void BigReal::set_prec(long prec) { mpfr_prec_round(value_, clamp_prec(prec), MPFR_RNDN); }

BigReal BigReal::rounded(long prec) const {
  BigReal r(prec);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  if (rhs.prec() > prec()) set_prec(rhs.prec());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  if (rhs.prec() > prec()) set_prec(rhs.prec());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  if (rhs.prec() > prec()) set_prec(rhs.prec());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.prec() > prec()) set_prec(rhs.prec());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, double b) {
  if (mpfr_nan_p(a.value_) || b != b) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

long BigReal::exponent2() const {
  if (!mpfr_regular_p(value_)) return 0;
  return static_cast<long>(mpfr_get_exp(value_));
}

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(std::max(digits, 1)), value_,
                           MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign_str;
  if (!mant.empty() && mant[0] == '-') {
    sign_str = "-";
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  const long lead = static_cast<long>(exp10) - 1;  // decimal exponent of first digit
  std::string out;
  if (lead >= -7 && lead < 21) {
    if (lead < 0) {
      out = "0." + std::string(static_cast<size_t>(-lead - 1), '0') + mant;
    } else if (static_cast<size_t>(lead + 1) >= mant.size()) {
      out = mant + std::string(static_cast<size_t>(lead + 1) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<size_t>(lead + 1)) + "." +
            mant.substr(static_cast<size_t>(lead + 1));
    }
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += (lead < 0 ? "e-" : "e+") + std::to_string(lead < 0 ? -lead : lead);
  }
  return sign_str + out;
}

BigReal abs(const BigReal& x) {
  BigReal r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(x.prec());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  BigReal r(x.prec());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(max_prec(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long y) {
  BigReal r(x.prec());
  mpfr_pow_si(r.get(), x.get(), y, MPFR_RNDN);
  return r;
}

BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }
BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal pi(long prec) {
  BigReal r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigReal gamma_fn(const BigReal& x) {
  if (mpfr_integer_p(x.get()) && x.sign() <= 0) {
    throw DomainError("Gamma pole at " + x.to_string());
  }
  BigReal r(x.prec());
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal relative_difference(const BigReal& a, const BigReal& b) {
  BigReal diff = abs(a - b);
  if (b.is_zero()) return diff;
  return diff / abs(b);
}

ExactRational binomial(const ExactRational& top, long k) {
  if (k < 0) return 0;
  ExactRational r = 1;
  for (long i = 0; i < k; ++i) {
    r *= top - i;
    r /= i + 1;
  }
  r.canonicalize();
  return r;
}

ExactInteger binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  ExactInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ExactInteger factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  ExactInteger r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::string to_string(const ExactRational& q) { return q.get_str(10); }

ExactRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational");
  const auto dot = s.find('.');
  try {
    if (dot != std::string::npos && s.find('/') == std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const size_t frac_len = s.size() - dot - 1;
      ExactRational q(ExactInteger(digits, 10), ExactInteger(1));
      ExactInteger scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac_len));
      q /= scale;
      q.canonicalize();
      return q;
    }
    ExactRational q(s, 10);
    if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + s + "'");
  }
}

}  // namespace jensen
