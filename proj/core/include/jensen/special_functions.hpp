#pragma once

// Configurable-precision special functions: modified Bessel I_alpha (power
// series and large-argument expansion), the ratio G = I_0/I_1, digamma,
// polygamma and Bernoulli numbers.

#include "jensen/numeric.hpp"

namespace jensen {

// Number of terms retained in an asymptotic expansion.
struct ExpansionOrder {
  long m = 0;
};

// I_alpha(z) = (z/2)^alpha sum_j (z^2/4)^j / (Gamma(alpha+j+1) j!), z >= 0.
BigReal bessel_i_series(const ExactRational& alpha, const BigReal& z, const PrecisionContext& ctx);

// e^z / sqrt(2 pi z) * sum_{j<m} binom(j-1/2+alpha, j) binom(j-1/2-alpha, j) j! / (2z)^j.
// Truncates early at the smallest term.  DomainError when the term at the
// requested order is not smaller than the leading term.
BigReal bessel_i_asymptotic(const ExactRational& alpha, const BigReal& z, ExpansionOrder order,
                            const PrecisionContext& ctx);

// Just the bracketed sum of bessel_i_asymptotic (no e^z / sqrt(2 pi z) factor).
BigReal bessel_i_asymptotic_sum(const ExactRational& alpha, const BigReal& z, ExpansionOrder order,
                                const PrecisionContext& ctx);

// Path-selected I_alpha(z): the series below the switchover, the expansion
// above it.
BigReal bessel_i(const ExactRational& alpha, const BigReal& z, const PrecisionContext& ctx);

// Series below z = 30 and whenever the expansion's smallest term (about
// e^{-2z}) cannot reach the working precision; expansion otherwise.
bool bessel_uses_asymptotic(const BigReal& z, const PrecisionContext& ctx);
constexpr double kBesselSwitchover = 30.0;
// Default expansion order above the switchover: bits / 4.
ExpansionOrder default_bessel_order(const PrecisionContext& ctx);

// G(z) = I_0(z) / I_1(z), z > 0.
BigReal bessel_ratio_G(const BigReal& z, const PrecisionContext& ctx);

// Exact Bernoulli numbers with B_1 = -1/2.
ExactRational bernoulli(long j);

// Default number of Bernoulli terms: max(10, bits / 8).
ExpansionOrder default_digamma_order(const PrecisionContext& ctx);

// psi(x), x > 0: upward recurrence to x >= 16 (or further when the
// requested order cannot reach working precision), then
// log x - 1/(2x) - sum_{k=1}^{m} B_{2k} / (2k x^{2k}).
BigReal digamma(const BigReal& x, const PrecisionContext& ctx, ExpansionOrder order);
BigReal digamma(const BigReal& x, const PrecisionContext& ctx);

// psi^{(r)}(x) for r >= 1, x > 0.
BigReal polygamma(long r, const BigReal& x, const PrecisionContext& ctx, ExpansionOrder order);
BigReal polygamma(long r, const BigReal& x, const PrecisionContext& ctx);

}  // namespace jensen
