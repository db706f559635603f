#pragma once

// Jensen, reciprocal Jensen, Hermite, Laguerre and De Moivre polynomials,
// the Hermite-Jensen renormalization and a few combinatorial helpers.

#include <functional>
#include <span>
#include <vector>

#include "jensen/hj_data.hpp"
#include "jensen/polynomial.hpp"
#include "jensen/sequences.hpp"

namespace jensen {

// A_{n,k}(a_1, a_2, ...): coefficient of x^n in (a_1 x + a_2 x^2 + ...)^k.
// a[0] holds a_1.  Missing entries count as zero; n < k gives 0.
ExactRational de_moivre(long n, long k, std::span<const ExactRational> a);
BigReal de_moivre(long n, long k, std::span<const BigReal> a);

// sum_j binom(d, j) alpha(n + j) X^j.
RationalPolynomial jensen_poly(const SequenceId& id, long d, long n);  // rational terms only
RealPolynomial jensen_poly_real(const SequenceId& id, long d, long n, const PrecisionContext& ctx);
// From explicit values alpha(n), ..., alpha(n + d).
RationalPolynomial jensen_from_terms(std::span<const ExactRational> terms);

// X^d J(1/X).
RationalPolynomial reciprocal_jensen(const SequenceId& id, long d, long n);
RealPolynomial reciprocal_jensen_real(const SequenceId& id, long d, long n,
                                      const PrecisionContext& ctx);

// J / alpha(n): coefficients binom(d, j) alpha(n+j)/alpha(n).  Exact for
// every family with rational ratios, in particular Gamma(beta) with rational
// beta and its reciprocal.  Same roots as J.
RationalPolynomial scaled_jensen_poly(const SequenceId& id, long d, long n);

enum class HermiteVariant { Real, Imag };

// Real: H_d(X/2).  Imag: i^{-d} H_d(iX/2).  Monic with integer coefficients.
RationalPolynomial hermite_target(long d, HermiteVariant variant);
// Physicists' H_d(X).
RationalPolynomial hermite_physicists(long d);
HermiteVariant variant_for_kappa(int kappa);

// Generalized Laguerre L_d^{(r)}(X) with coefficients
// (-1)^j binom(d + r, d - j) / j!.  DomainError when r is an integer <= -1.
RationalPolynomial laguerre(long d, const ExactRational& r);
RealPolynomial laguerre_real(long d, const BigReal& r);
// X^d L_d^{(r)}(1/X).
RationalPolynomial laguerre_reciprocal(long d, const ExactRational& r);
RealPolynomial laguerre_reciprocal_real(long d, const BigReal& r);

// Ratio provider: returns alpha(n+j)/alpha(n) at the requested precision.
using RatioFn = std::function<BigReal(long j, long prec)>;

// delta^{-d}/alpha(n) J(( delta X - 1) / e^A), evaluated through
//   [X^k] = binom(d,k) delta^{k-d} sum_{j=k}^{d} (-1)^{j-k} binom(d-k, j-k) r_j e^{-A j}.
// Precision starts at max(ctx.bits, 192, ceil(d log2(1/delta)) + 96) and
// doubles until two successive results agree to 2^-32 in sup norm.
RealPolynomial renormalize_jensen(const SequenceId& id, long d, long n, const HJData& data,
                                  const PrecisionContext& ctx);
// (e^A delta)^{-d}/alpha(n) K(e^A (delta X - 1)).
RealPolynomial renormalize_reciprocal(const SequenceId& id, long d, long n, const HJData& data,
                                      const PrecisionContext& ctx);

RealPolynomial renormalize_jensen(const RatioFn& ratio, long d, const BigReal& A,
                                  const BigReal& delta, const PrecisionContext& ctx);
RealPolynomial renormalize_reciprocal(const RatioFn& ratio, long d, const BigReal& A,
                                      const BigReal& delta, const PrecisionContext& ctx);
RatioFn ratio_fn(const SequenceId& id, long n);
// Ratios from explicit values alpha(n), ..., alpha(n + d).
RatioFn ratio_fn(std::vector<ExactRational> terms);

long renormalization_bits(long d, const BigReal& delta, const PrecisionContext& ctx);

// sum_{j=k}^{d} (-1)^{j-k} binom(d-k, j-k) j^r.
ExactInteger sigma(long d, long k, long r);

// Delta^r f(0) = sum_i (-1)^{r-i} binom(r, i) values[i].
ExactRational forward_difference(std::span<const ExactRational> values, long r);
BigReal forward_difference(std::span<const BigReal> values, long r);

// Stirling numbers of the second kind {k over r}.
ExactInteger stirling_subset(long k, long r);

}  // namespace jensen
