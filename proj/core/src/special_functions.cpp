#include "jensen/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include "jensen/errors.hpp"

namespace jensen {

namespace {

// log2 |q| for a nonzero rational, to double accuracy.
double log2_abs(const ExactRational& q) {
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log2(std::fabs(mn)) + static_cast<double>(en) - std::log2(std::fabs(md)) -
         static_cast<double>(ed);
}

// Terms j = 0..max_index of the large-argument expansion of I_alpha.
// Summation stops at the smallest term when terms start growing.  In strict
// mode every term up to max_index is examined and DomainError is raised when
// |c_max_index| >= |c_0|; otherwise summation also stops once a term drops
// below 2^-wp of the running sum.
BigReal asymptotic_sum(const ExactRational& alpha, const BigReal& z, long max_index, long wp,
                       bool strict) {
  const BigReal two_z = z.rounded(wp) * 2L;
  const BigReal a(alpha, wp);
  const BigReal one(1L, wp);
  const BigReal tiny = one / pow(BigReal(2L, wp), wp);
  BigReal sum = one;
  BigReal term = one;
  bool growing = false;
  for (long j = 0; j < max_index; ++j) {
    // c_{j+1} / c_j = (j + 1/2 + alpha)(j + 1/2 - alpha) / ((j + 1) 2z)
    const BigReal half_j = BigReal(2 * j + 1, wp) / 2L;
    BigReal next = term * (half_j + a) * (half_j - a) / two_z / (j + 1);
    const BigReal mag = abs(next);
    if (!growing && mag > abs(term)) growing = true;
    if (!growing) {
      sum += next;
      if (!strict && mag <= tiny * abs(sum)) break;
    } else if (!strict) {
      break;
    }
    term = std::move(next);
  }
  if (strict && max_index >= 1 && abs(term) >= one) {
    throw DomainError("asymptotic Bessel expansion diverges at the requested order (z = " +
                      z.to_string(8) + ")");
  }
  return sum;
}

}  // namespace

BigReal bessel_i_series(const ExactRational& alpha_in, const BigReal& z,
                        const PrecisionContext& ctx) {
  ctx.validate();
  if (z.sign() < 0) throw DomainError("bessel_i_series requires z >= 0");
  ExactRational alpha = alpha_in;
  if (alpha < 0 && alpha.get_den() == 1) alpha = -alpha;  // I_{-n} = I_n
  const long wp = ctx.working_bits() + 16;
  if (z.is_zero()) {
    if (alpha == 0) return BigReal(1L, ctx.bits);
    if (alpha > 0) return BigReal(ctx.bits);
    throw DomainError("I_alpha(0) is infinite for negative non-integer alpha");
  }
  const BigReal half = z.rounded(wp) / 2L;
  const BigReal y = half * half;
  const BigReal a(alpha, wp);
  BigReal term = pow(half, a) / gamma_fn(a + BigReal(1L, wp));
  BigReal sum = term;
  const BigReal tiny = BigReal(1L, wp) / pow(BigReal(2L, wp), wp);
  for (long j = 0;; ++j) {
    if (j > ctx.max_terms) {
      throw PrecisionError("Bessel series did not converge within max_terms",
                           ctx.bits);
    }
    term *= y;
    term /= (a + BigReal(j + 1, wp)) * BigReal(j + 1, wp);
    sum += term;
    const bool decreasing = BigReal((j + 1) * (j + 2), wp) > y;
    if (decreasing && abs(term) <= tiny * abs(sum)) break;
  }
  return sum.rounded(ctx.bits);
}

BigReal bessel_i_asymptotic_sum(const ExactRational& alpha, const BigReal& z, ExpansionOrder order,
                                const PrecisionContext& ctx) {
  ctx.validate();
  if (z.sign() <= 0) throw DomainError("asymptotic Bessel expansion requires z > 0");
  if (order.m < 0) throw DomainError("expansion order must be >= 0");
  if (order.m > ctx.max_terms) throw DomainError("expansion order exceeds max_terms");
  return asymptotic_sum(alpha, z, order.m, ctx.working_bits() + 16, true).rounded(ctx.bits);
}

BigReal bessel_i_asymptotic(const ExactRational& alpha, const BigReal& z, ExpansionOrder order,
                            const PrecisionContext& ctx) {
  const long wp = ctx.working_bits() + 16;
  BigReal sum = bessel_i_asymptotic_sum(alpha, z, order, ctx.with_bits(wp - ctx.guard_bits));
  const BigReal zz = z.rounded(wp);
  const BigReal pref = exp(zz) / sqrt(pi(wp) * zz * 2L);
  return (pref * sum).rounded(ctx.bits);
}

ExpansionOrder default_bessel_order(const PrecisionContext& ctx) { return {ctx.bits / 4}; }

bool bessel_uses_asymptotic(const BigReal& z, const PrecisionContext& ctx) {
  if (z < kBesselSwitchover) return false;
  // The optimally truncated expansion is accurate to about e^{-2z}.
  const double reachable_bits = 2.0 * z.to_double() / std::log(2.0);
  return reachable_bits > static_cast<double>(ctx.working_bits() + 8);
}

BigReal bessel_i(const ExactRational& alpha, const BigReal& z, const PrecisionContext& ctx) {
  if (!bessel_uses_asymptotic(z, ctx)) return bessel_i_series(alpha, z, ctx);
  const long wp = ctx.working_bits() + 16;
  const long cap = std::max<long>(default_bessel_order(ctx).m, 4 * static_cast<long>(z.to_double()));
  BigReal sum = asymptotic_sum(alpha, z, cap, wp, false);
  const BigReal zz = z.rounded(wp);
  return (exp(zz) / sqrt(pi(wp) * zz * 2L) * sum).rounded(ctx.bits);
}

BigReal bessel_ratio_G(const BigReal& z, const PrecisionContext& ctx) {
  ctx.validate();
  if (z.sign() <= 0) throw DomainError("bessel_ratio_G requires z > 0");
  const long wp = ctx.working_bits() + 16;
  if (!bessel_uses_asymptotic(z, ctx)) {
    const PrecisionContext inner = ctx.with_bits(wp);
    return (bessel_i_series(0, z, inner) / bessel_i_series(1, z, inner)).rounded(ctx.bits);
  }
  // The common factor e^z / sqrt(2 pi z) cancels.
  const long cap = std::max<long>(default_bessel_order(ctx).m, 4 * static_cast<long>(z.to_double()));
  const BigReal s0 = asymptotic_sum(0, z, cap, wp, false);
  const BigReal s1 = asymptotic_sum(1, z, cap, wp, false);
  return (s0 / s1).rounded(ctx.bits);
}

// ------------------------------------------------------------------ Bernoulli

ExactRational bernoulli(long j) {
  if (j < 0) throw DomainError("bernoulli requires j >= 0");
  static std::mutex mutex;
  static std::vector<ExactRational> table{ExactRational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<long>(table.size()) <= j) {
    const long n = static_cast<long>(table.size());
    if (n > 1 && n % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    // sum_{k=0}^{n} binom(n+1, k) B_k = 0
    ExactRational acc = 0;
    for (long k = 0; k < n; ++k) {
      if (table[static_cast<size_t>(k)] == 0) continue;
      acc += ExactRational(binomial(n + 1, k)) * table[static_cast<size_t>(k)];
    }
    ExactRational b = -acc / ExactRational(n + 1);
    b.canonicalize();
    table.push_back(std::move(b));
  }
  return table[static_cast<size_t>(j)];
}

// ------------------------------------------------------------------- digamma

ExpansionOrder default_digamma_order(const PrecisionContext& ctx) {
  return {std::max<long>(10, ctx.bits / 8)};
}

namespace {

// Smallest x >= 16 at which the first omitted term, coef * x^-power relative
// to the leading term, drops below 2^-bits.
double shift_target(const ExactRational& coef, long power, long bits) {
  const double need = (log2_abs(coef) + static_cast<double>(bits)) / static_cast<double>(power);
  return std::max(16.0, std::ceil(std::exp2(need)));
}

}  // namespace

BigReal digamma(const BigReal& x, const PrecisionContext& ctx) {
  return digamma(x, ctx, default_digamma_order(ctx));
}

BigReal digamma(const BigReal& x_in, const PrecisionContext& ctx, ExpansionOrder order) {
  ctx.validate();
  if (x_in.sign() <= 0) throw DomainError("digamma requires x > 0");
  const long m = std::max<long>(order.m, 1);
  const long wp = ctx.working_bits() + 16;
  BigReal x = x_in.rounded(wp);
  const ExactRational next_coef = bernoulli(2 * m + 2) / ExactRational(2 * m + 2);
  const double target = shift_target(next_coef, 2 * m + 2, wp);
  BigReal shift_sum(wp);
  if (x < target) {
    const long steps = static_cast<long>(std::ceil(target - x.to_double()));
    if (steps > ctx.max_terms) throw PrecisionError("digamma shift exceeds max_terms", ctx.bits);
    for (long i = 0; i < steps; ++i) {
      shift_sum += BigReal(1L, wp) / x;
      x += BigReal(1L, wp);
    }
  }
  const BigReal inv = BigReal(1L, wp) / x;
  const BigReal inv2 = inv * inv;
  BigReal value = log(x) - inv / 2L;
  BigReal power = inv2;
  for (long k = 1; k <= m; ++k) {
    value -= BigReal(bernoulli(2 * k) / ExactRational(2 * k), wp) * power;
    power *= inv2;
  }
  return (value - shift_sum).rounded(ctx.bits);
}

BigReal polygamma(long r, const BigReal& x, const PrecisionContext& ctx) {
  return polygamma(r, x, ctx, default_digamma_order(ctx));
}

BigReal polygamma(long r, const BigReal& x_in, const PrecisionContext& ctx, ExpansionOrder order) {
  ctx.validate();
  if (r < 1) throw DomainError("polygamma requires r >= 1");
  if (x_in.sign() <= 0) throw DomainError("polygamma requires x > 0");
  const long m = std::max<long>(order.m, 1);
  const long wp = ctx.working_bits() + 16;
  BigReal x = x_in.rounded(wp);
  // omitted term relative to the leading (r-1)!/x^r
  const ExactRational next_coef = ExactRational(factorial(2 * m + r + 1)) *
                                  bernoulli(2 * m + 2) /
                                  ExactRational(factorial(2 * m + 2) * factorial(r - 1));
  const double target = shift_target(next_coef, 2 * m + 2, wp);
  const ExactInteger r_fact = factorial(r);
  BigReal shift_sum(wp);
  if (x < target) {
    const long steps = static_cast<long>(std::ceil(target - x.to_double()));
    if (steps > ctx.max_terms) throw PrecisionError("polygamma shift exceeds max_terms", ctx.bits);
    for (long i = 0; i < steps; ++i) {
      shift_sum += pow(x, -(r + 1));
      x += BigReal(1L, wp);
    }
    shift_sum *= BigReal(r_fact, wp);
  }
  const BigReal inv = BigReal(1L, wp) / x;
  BigReal bracket = BigReal(factorial(r - 1), wp) * pow(inv, r) +
                    BigReal(r_fact, wp) * pow(inv, r + 1) / 2L;
  const BigReal inv2 = inv * inv;
  BigReal power = pow(inv, r + 2);
  for (long k = 1; k <= m; ++k) {
    const ExactRational coef =
        ExactRational(factorial(2 * k + r - 1)) * bernoulli(2 * k) / ExactRational(factorial(2 * k));
    bracket += BigReal(coef, wp) * power;
    power *= inv2;
  }
  // psi^(r)(x) = (-1)^{r+1} bracket(x + N) - (-1)^r r! sum 1/(x+i)^{r+1}
  BigReal value = (r % 2 == 1) ? bracket + shift_sum : -(bracket + shift_sum);
  return value.rounded(ctx.bits);
}

}  // namespace jensen
