#include "jensen/polynomial.hpp"

namespace jensen {

RealPolynomial to_real(const RationalPolynomial& p, long prec) {
  std::vector<BigReal> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.emplace_back(q, prec);
  return RealPolynomial(std::move(c));
}

namespace {

template <typename S>
Polynomial<S> compose_affine_impl(const Polynomial<S>& p, const S& shift, const S& scale) {
  if (p.is_zero()) return {};
  const Polynomial<S> lin(std::vector<S>{shift, scale});
  Polynomial<S> acc;
  for (long i = p.degree(); i >= 0; --i) {
    acc = acc * lin;
    acc += Polynomial<S>(std::vector<S>{p.coeff(i)});
  }
  return acc;
}

}  // namespace

RationalPolynomial compose_affine(const RationalPolynomial& p, const ExactRational& shift,
                                  const ExactRational& scale) {
  return compose_affine_impl(p, shift, scale);
}

RealPolynomial compose_affine(const RealPolynomial& p, const BigReal& shift, const BigReal& scale) {
  return compose_affine_impl(p, shift, scale);
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
  std::vector<ExactRational> rem(a.coeffs().begin(), a.coeffs().end());
  const long db = b.degree();
  std::vector<ExactRational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const ExactRational lead = b.leading();
  for (long i = a.degree(); i >= db; --i) {
    ExactRational f = rem[static_cast<std::size_t>(i)] / lead;
    if (sgn(f) == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = f;
    for (long j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial make_monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  RationalPolynomial m = p;
  m *= ExactRational(1) / p.leading();
  return m;
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = make_monic(a);
  RationalPolynomial y = make_monic(b);
  while (!y.is_zero()) {
    RationalPolynomial r = make_monic(divmod(x, y).second);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

BigReal sup_distance(const RealPolynomial& p, const RealPolynomial& q) {
  long prec = 64;
  for (const auto& c : p.coeffs()) prec = std::max(prec, c.prec());
  for (const auto& c : q.coeffs()) prec = std::max(prec, c.prec());
  BigReal best(prec);
  const long d = std::max(p.degree(), q.degree());
  for (long i = 0; i <= d; ++i) {
    BigReal diff = BigReal(prec) + p.coeff(i);
    diff -= q.coeff(i);
    best = max(best, abs(diff));
  }
  return best;
}

ExactRational sup_distance(const RationalPolynomial& p, const RationalPolynomial& q) {
  ExactRational best = 0;
  const long d = std::max(p.degree(), q.degree());
  for (long i = 0; i <= d; ++i) {
    ExactRational diff = abs(p.coeff(i) - q.coeff(i));
    if (diff > best) best = diff;
  }
  return best;
}

}  // namespace jensen
