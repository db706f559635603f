#include "jensen/poly_core.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "jensen/errors.hpp"

namespace jensen {

namespace {

void require_degree(long d) {
  if (d < 0) throw DomainError("degree must be >= 0");
}

template <typename S>
S de_moivre_impl(long n, long k, std::span<const S> a, const S& zero, const S& one) {
  if (n < 0 || k < 0) throw DomainError("de_moivre requires n, k >= 0");
  if (n < k) return zero;
  if (k == 0) return n == 0 ? one : zero;
  auto coeff = [&](long i) -> const S* {
    return i >= 1 && i <= static_cast<long>(a.size()) ? &a[static_cast<std::size_t>(i - 1)] : nullptr;
  };
  // row[m] = A_{m,t} for the current t; A_{m,t} = sum_i a_i A_{m-i,t-1}.
  std::vector<S> row(static_cast<std::size_t>(n + 1), zero);
  row[0] = one;
  for (long t = 1; t <= k; ++t) {
    std::vector<S> next(static_cast<std::size_t>(n + 1), zero);
    for (long m = t; m <= n; ++m) {
      for (long i = 1; i <= m - (t - 1); ++i) {
        const S* ai = coeff(i);
        if (ai == nullptr) continue;
        next[static_cast<std::size_t>(m)] += *ai * row[static_cast<std::size_t>(m - i)];
      }
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(n)];
}

bool is_negative_integer(const ExactRational& r) { return r.get_den() == 1 && r < 0; }

bool is_negative_integer(const BigReal& r) {
  return mpfr_integer_p(r.get()) != 0 && r.sign() < 0;
}

}  // namespace

ExactRational de_moivre(long n, long k, std::span<const ExactRational> a) {
  return de_moivre_impl<ExactRational>(n, k, a, ExactRational(0), ExactRational(1));
}

BigReal de_moivre(long n, long k, std::span<const BigReal> a) {
  long prec = 64;
  for (const auto& x : a) prec = std::max(prec, x.prec());
  return de_moivre_impl<BigReal>(n, k, a, BigReal(prec), BigReal(1L, prec));
}

// ------------------------------------------------------------------ Jensen

RationalPolynomial jensen_from_terms(std::span<const ExactRational> terms) {
  if (terms.empty()) throw DomainError("jensen_from_terms needs at least one term");
  const long d = static_cast<long>(terms.size()) - 1;
  std::vector<ExactRational> c;
  c.reserve(terms.size());
  for (long j = 0; j <= d; ++j) {
    c.push_back(ExactRational(binomial(d, j)) * terms[static_cast<std::size_t>(j)]);
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial jensen_poly(const SequenceId& id, long d, long n) {
  require_degree(d);
  id.validate();
  std::vector<ExactRational> terms;
  for (long j = 0; j <= d; ++j) terms.push_back(rational_term(id, n + j));
  return jensen_from_terms(terms);
}

RealPolynomial jensen_poly_real(const SequenceId& id, long d, long n, const PrecisionContext& ctx) {
  require_degree(d);
  if (id.has_rational_terms()) return to_real(jensen_poly(id, d, n), ctx.bits);
  std::vector<BigReal> c;
  for (long j = 0; j <= d; ++j) {
    c.push_back(sequence_term(id, n + j, ctx) * BigReal(binomial(d, j), ctx.bits));
  }
  return RealPolynomial(std::move(c));
}

RationalPolynomial reciprocal_jensen(const SequenceId& id, long d, long n) {
  return jensen_poly(id, d, n).reversed(d);
}

RealPolynomial reciprocal_jensen_real(const SequenceId& id, long d, long n,
                                      const PrecisionContext& ctx) {
  return jensen_poly_real(id, d, n, ctx).reversed(d);
}

RationalPolynomial scaled_jensen_poly(const SequenceId& id, long d, long n) {
  require_degree(d);
  if (!id.has_rational_ratios()) {
    throw UnsupportedError(id.name() + " has irrational term ratios");
  }
  std::vector<ExactRational> c;
  for (long j = 0; j <= d; ++j) {
    c.push_back(ExactRational(binomial(d, j)) * *exact_ratio(id, n, j));
  }
  return RationalPolynomial(std::move(c));
}

// ----------------------------------------------------------------- Hermite

RationalPolynomial hermite_target(long d, HermiteVariant variant) {
  require_degree(d);
  std::vector<ExactRational> c(static_cast<std::size_t>(d + 1));
  // d! / (k! (d-2k)!) X^{d-2k}, alternating for the real variant
  for (long k = 0; 2 * k <= d; ++k) {
    ExactRational v(factorial(d), factorial(k) * factorial(d - 2 * k));
    v.canonicalize();
    if (variant == HermiteVariant::Real && k % 2 == 1) v = -v;
    c[static_cast<std::size_t>(d - 2 * k)] = v;
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial hermite_physicists(long d) {
  // Scale X^i of H_d(X/2) by 2^i.
  RationalPolynomial half = hermite_target(d, HermiteVariant::Real);
  std::vector<ExactRational> c(half.coeffs().begin(), half.coeffs().end());
  ExactInteger power = 1;
  for (auto& v : c) {
    v *= power;
    power *= 2;
  }
  return RationalPolynomial(std::move(c));
}

HermiteVariant variant_for_kappa(int kappa) {
  if (kappa == -1) return HermiteVariant::Real;
  if (kappa == 1) return HermiteVariant::Imag;
  throw DomainError("kappa must be +1 or -1");
}

// ---------------------------------------------------------------- Laguerre

RationalPolynomial laguerre(long d, const ExactRational& r) {
  require_degree(d);
  if (is_negative_integer(r)) throw DomainError("Laguerre parameter hits a Gamma pole");
  std::vector<ExactRational> c;
  for (long j = 0; j <= d; ++j) {
    ExactRational v = binomial(ExactRational(r + d), d - j) / ExactRational(factorial(j));
    if (j % 2 == 1) v = -v;
    c.push_back(std::move(v));
  }
  return RationalPolynomial(std::move(c));
}

RealPolynomial laguerre_real(long d, const BigReal& r) {
  require_degree(d);
  if (is_negative_integer(r)) throw DomainError("Laguerre parameter hits a Gamma pole");
  const long prec = r.prec();
  std::vector<BigReal> c;
  for (long j = 0; j <= d; ++j) {
    // binom(d + r, d - j) = prod_{i < d-j} (d + r - i) / (d-j)!
    BigReal v(1L, prec);
    for (long i = 0; i < d - j; ++i) v *= r + BigReal(d - i, prec);
    v /= BigReal(ExactInteger(factorial(d - j) * factorial(j)), prec);
    if (j % 2 == 1) v = -v;
    c.push_back(std::move(v));
  }
  return RealPolynomial(std::move(c));
}

RationalPolynomial laguerre_reciprocal(long d, const ExactRational& r) {
  return laguerre(d, r).reversed(d);
}

RealPolynomial laguerre_reciprocal_real(long d, const BigReal& r) {
  return laguerre_real(d, r).reversed(d);
}

// ---------------------------------------------------------- renormalization

RatioFn ratio_fn(const SequenceId& id, long n) {
  id.validate();
  return [id, n](long j, long prec) { return real_ratio(id, n, j, prec); };
}

RatioFn ratio_fn(std::vector<ExactRational> terms) {
  auto shared = std::make_shared<const std::vector<ExactRational>>(std::move(terms));
  if (shared->empty() || sgn(shared->front()) == 0) {
    throw DomainError("ratio_fn needs a nonzero first term");
  }
  return [shared](long j, long prec) {
    if (j < 0 || j >= static_cast<long>(shared->size())) {
      throw DomainError("ratio index outside the supplied terms");
    }
    return BigReal(ExactRational((*shared)[static_cast<std::size_t>(j)] / shared->front()), prec);
  };
}

long renormalization_bits(long d, const BigReal& delta, const PrecisionContext& ctx) {
  const double log2_inv = -std::log2(delta.to_double());
  const long need = static_cast<long>(std::ceil(static_cast<double>(d) * log2_inv)) + 96;
  return std::max({ctx.bits, 192L, need});
}

namespace {

RealPolynomial renormalize_at(const RatioFn& ratio, long d, const BigReal& A, const BigReal& delta,
                              long wp, bool reciprocal) {
  // A and delta are taken as exact; widen rather than round them.
  const BigReal a = A.rounded(std::max(wp, A.prec()));
  const BigReal dl = delta.rounded(std::max(wp, delta.prec()));
  std::vector<BigReal> w;
  w.reserve(static_cast<std::size_t>(d + 1));
  for (long j = 0; j <= d; ++j) {
    BigReal e = exp(-(a * j)).rounded(wp);
    w.push_back(ratio(j, wp) * e);
  }
  const BigReal inv_delta = BigReal(1L, wp) / dl;
  std::vector<BigReal> c;
  c.reserve(static_cast<std::size_t>(d + 1));
  for (long k = 0; k <= d; ++k) {
    BigReal inner(wp);
    if (!reciprocal) {
      for (long j = k; j <= d; ++j) {
        BigReal t = w[static_cast<std::size_t>(j)] * BigReal(binomial(d - k, j - k), wp);
        if ((j - k) % 2 == 0) {
          inner += t;
        } else {
          inner -= t;
        }
      }
    } else {
      for (long j = 0; j <= d - k; ++j) {
        BigReal t = w[static_cast<std::size_t>(j)] * BigReal(binomial(d - k, j), wp);
        if ((d - j - k) % 2 == 0) {
          inner += t;
        } else {
          inner -= t;
        }
      }
    }
    inner *= BigReal(binomial(d, k), wp);
    inner *= pow(inv_delta, d - k);
    c.push_back(std::move(inner));
  }
  return RealPolynomial(std::move(c));
}

RealPolynomial renormalize_stable(const RatioFn& ratio, long d, const BigReal& A,
                                  const BigReal& delta, const PrecisionContext& ctx,
                                  bool reciprocal) {
  ctx.validate();
  if (d < 1) throw DomainError("renormalization requires d >= 1");
  if (delta.sign() <= 0 || !delta.is_finite()) throw DomainError("delta must be > 0");
  if (!A.is_finite()) throw DomainError("A must be finite");
  long bits = renormalization_bits(d, delta, ctx);
  RealPolynomial prev = renormalize_at(ratio, d, A, delta, bits, reciprocal);
  const BigReal tol = pow(BigReal(2L, 64), -32);
  constexpr int kMaxDoublings = 6;
  for (int i = 0; i < kMaxDoublings; ++i) {
    RealPolynomial cur = renormalize_at(ratio, d, A, delta, 2 * bits, reciprocal);
    if (sup_distance(prev, cur) < tol) {
      std::vector<BigReal> out;
      for (long k = 0; k <= d; ++k) out.push_back(cur.coeff(k).rounded(ctx.bits));
      return RealPolynomial(std::move(out));
    }
    prev = std::move(cur);
    bits *= 2;
  }
  throw PrecisionError("renormalized coefficients did not stabilize", 4 * bits);
}

}  // namespace

RealPolynomial renormalize_jensen(const RatioFn& ratio, long d, const BigReal& A,
                                  const BigReal& delta, const PrecisionContext& ctx) {
  return renormalize_stable(ratio, d, A, delta, ctx, false);
}

RealPolynomial renormalize_reciprocal(const RatioFn& ratio, long d, const BigReal& A,
                                      const BigReal& delta, const PrecisionContext& ctx) {
  return renormalize_stable(ratio, d, A, delta, ctx, true);
}

RealPolynomial renormalize_jensen(const SequenceId& id, long d, long n, const HJData& data,
                                  const PrecisionContext& ctx) {
  return renormalize_jensen(ratio_fn(id, n), d, data.A, data.delta, ctx);
}

RealPolynomial renormalize_reciprocal(const SequenceId& id, long d, long n, const HJData& data,
                                      const PrecisionContext& ctx) {
  return renormalize_reciprocal(ratio_fn(id, n), d, data.A, data.delta, ctx);
}

// ------------------------------------------------------------ combinatorics

namespace {
constexpr long kMemoLimit = 64;
}

ExactInteger sigma(long d, long k, long r) {
  if (k < 0 || k > d || r < 0) throw DomainError("sigma requires 0 <= k <= d and r >= 0");
  static std::mutex mutex;
  static std::map<std::tuple<long, long, long>, ExactInteger> memo;
  const bool cacheable = d <= kMemoLimit && r <= kMemoLimit;
  if (cacheable) {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({d, k, r}); it != memo.end()) return it->second;
  }
  ExactInteger acc = 0;
  for (long j = k; j <= d; ++j) {
    ExactInteger power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(r));
    const ExactInteger t = binomial(d - k, j - k) * power;
    if ((j - k) % 2 == 0) {
      acc += t;
    } else {
      acc -= t;
    }
  }
  if (cacheable) {
    std::lock_guard lock(mutex);
    memo.emplace(std::tuple{d, k, r}, acc);
  }
  return acc;
}

ExactRational forward_difference(std::span<const ExactRational> values, long r) {
  if (r < 0 || static_cast<long>(values.size()) < r + 1) {
    throw DomainError("forward_difference needs r + 1 values");
  }
  ExactRational acc = 0;
  for (long i = 0; i <= r; ++i) {
    const ExactRational t = ExactRational(binomial(r, i)) * values[static_cast<std::size_t>(i)];
    if ((r - i) % 2 == 0) {
      acc += t;
    } else {
      acc -= t;
    }
  }
  return acc;
}

BigReal forward_difference(std::span<const BigReal> values, long r) {
  if (r < 0 || static_cast<long>(values.size()) < r + 1) {
    throw DomainError("forward_difference needs r + 1 values");
  }
  long prec = 64;
  for (const auto& v : values) prec = std::max(prec, v.prec());
  BigReal acc(prec);
  for (long i = 0; i <= r; ++i) {
    const BigReal t = values[static_cast<std::size_t>(i)] * BigReal(binomial(r, i), prec);
    if ((r - i) % 2 == 0) {
      acc += t;
    } else {
      acc -= t;
    }
  }
  return acc;
}

ExactInteger stirling_subset(long k, long r) {
  if (k < 0 || r < 0) throw DomainError("stirling_subset requires k, r >= 0");
  if (r > k) return 0;
  if (k <= kMemoLimit) {
    static const auto table = [] {
      std::vector<std::vector<ExactInteger>> t(kMemoLimit + 1,
                                               std::vector<ExactInteger>(kMemoLimit + 1, 0));
      t[0][0] = 1;
      for (long n = 1; n <= kMemoLimit; ++n) {
        for (long m = 1; m <= n; ++m) t[n][m] = m * t[n - 1][m] + t[n - 1][m - 1];
      }
      return t;
    }();
    return table[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
  }
  // r! {k over r} = sum_i (-1)^{r-i} binom(r, i) i^k
  ExactInteger acc = 0;
  for (long i = 0; i <= r; ++i) {
    ExactInteger power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(k));
    const ExactInteger t = binomial(r, i) * power;
    if ((r - i) % 2 == 0) {
      acc += t;
    } else {
      acc -= t;
    }
  }
  return acc / factorial(r);
}

}  // namespace jensen
