#pragma once

// Dense univariate polynomials over ExactRational or BigReal.
//
// The scalar kind is part of the type: exact routines (Sturm chains, gcd,
// division) only accept RationalPolynomial, and conversion to BigReal happens
// explicitly through to_real().

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jensen/numeric.hpp"

namespace jensen {

enum class ScalarKind { Rational, Real };

namespace detail {

inline bool is_zero(const ExactRational& q) { return sgn(q) == 0; }
inline bool is_zero(const BigReal& x) { return x.is_zero(); }
inline ExactRational zero_like(const ExactRational&) { return 0; }
inline BigReal zero_like(const BigReal& x) { return BigReal(x.prec()); }

template <typename S>
constexpr ScalarKind kind_of() {
  if constexpr (std::is_same_v<S, ExactRational>) {
    return ScalarKind::Rational;
  } else {
    return ScalarKind::Real;
  }
}

}  // namespace detail

template <typename S>
class Polynomial {
 public:
  using Scalar = S;
  static constexpr ScalarKind kind = detail::kind_of<S>();

  Polynomial() = default;
  // Coefficients c_0..c_d, constant term first.  Trailing zeros are dropped.
  explicit Polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Polynomial monomial(S coeff, std::size_t power) {
    std::vector<S> c;
    c.reserve(power + 1);
    for (std::size_t i = 0; i < power; ++i) c.push_back(detail::zero_like(coeff));
    c.push_back(std::move(coeff));
    return Polynomial(std::move(c));
  }

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const S> coeffs() const { return coeffs_; }

  S coeff(long i) const {
    if (i < 0 || i > degree()) return coeffs_.empty() ? S{} : detail::zero_like(coeffs_.front());
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const S& leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  template <typename X>
  X evaluate(const X& x) const {
    if (coeffs_.empty()) return x - x;
    X acc = x - x;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += X(*it);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<S> c;
    c.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      S v = coeffs_[i];
      v *= static_cast<long>(i);
      c.push_back(std::move(v));
    }
    return Polynomial(std::move(c));
  }

  // X^d P(1/X) for d >= degree().
  Polynomial reversed(long d) const {
    if (d < degree()) throw std::invalid_argument("reversal degree below polynomial degree");
    if (coeffs_.empty()) return {};
    std::vector<S> c(static_cast<std::size_t>(d + 1), detail::zero_like(coeffs_.front()));
    for (long i = 0; i <= degree(); ++i) {
      c[static_cast<std::size_t>(d - i)] = coeffs_[static_cast<std::size_t>(i)];
    }
    return Polynomial(std::move(c));
  }
  Polynomial reversed() const { return reversed(std::max<long>(degree(), 0)); }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
      const S z = detail::zero_like(rhs.coeffs_.front());
      coeffs_.resize(rhs.coeffs_.size(), z);
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
      const S z = detail::zero_like(rhs.coeffs_.front());
      coeffs_.resize(rhs.coeffs_.size(), z);
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const S& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> c(a.coeffs_.size() + b.coeffs_.size() - 1, detail::zero_like(a.coeffs_.front()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    }
    return true;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && detail::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

using RationalPolynomial = Polynomial<ExactRational>;
using RealPolynomial = Polynomial<BigReal>;

RealPolynomial to_real(const RationalPolynomial& p, long prec);

// P(shift + scale X), by Horner's scheme in polynomial arithmetic.
RationalPolynomial compose_affine(const RationalPolynomial& p, const ExactRational& shift,
                                  const ExactRational& scale);
RealPolynomial compose_affine(const RealPolynomial& p, const BigReal& shift, const BigReal& scale);

// Euclidean division: a = q b + r with deg r < deg b.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);
// Monic gcd (zero when both inputs are zero).
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial make_monic(const RationalPolynomial& p);

// max_i |p_i - q_i| over the union of supports.
BigReal sup_distance(const RealPolynomial& p, const RealPolynomial& q);
ExactRational sup_distance(const RationalPolynomial& p, const RationalPolynomial& q);

}  // namespace jensen
