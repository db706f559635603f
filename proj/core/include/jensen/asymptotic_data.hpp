#pragma once

// Hermite-Jensen data {A(n), kappa, delta(n)} for each family, in the exact
// and simplified variants, and the coefficients rho_r of the partition
// log-ratio expansion.

#include <vector>

#include "jensen/hj_data.hpp"
#include "jensen/numeric.hpp"
#include "jensen/sequences.hpp"

namespace jensen {

HJData data_partition(long n, DataVariant variant, const PrecisionContext& ctx);
HJData data_overpartition(long n, DataVariant variant, const PrecisionContext& ctx);
HJData data_kregular(long k, long n, DataVariant variant, const PrecisionContext& ctx);
HJData data_gamma(long n, const ExactRational& beta, DataVariant variant,
                  const PrecisionContext& ctx);
// Requires 0 < b < 2, b != 1, c != 0.  One variant only.
HJData data_powerexp(const ExactRational& a, const ExactRational& b, const ExactRational& c, long n,
                     const PrecisionContext& ctx);
// {-1 - log n, -1, (2n)^{-1/2}}.  One variant only.
HJData data_neg_self_power(long n, const PrecisionContext& ctx);

// Dispatch on id; a reciprocal family gets {-A, -kappa, delta}.
HJData data_for(const SequenceId& id, long n, DataVariant variant, const PrecisionContext& ctx);
// True for the families whose data has distinct exact and simplified forms.
bool has_simplified_variant(const SequenceId& id);

// A_{r,u}(binom(-1/2,1), binom(-1/2,2), ...) / u for u = 1..r, exact.
std::vector<ExactRational> rho_tail_coefficients(long r);

// rho_r(x) = (-1)^r/r + binom(1/2, r) x - sum_{u=1}^{r} A_{r,u}(...) / (u (x-1)^u), x > 1.
BigReal rho(long r, const BigReal& x, const PrecisionContext& ctx);

}  // namespace jensen
