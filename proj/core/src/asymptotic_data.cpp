#include "jensen/asymptotic_data.hpp"

#include <map>
#include <mutex>

#include "jensen/errors.hpp"
#include "jensen/poly_core.hpp"
#include "jensen/special_functions.hpp"

namespace jensen {

namespace {

void require_positive(long n) {
  if (n < 1) throw DomainError("asymptotic data requires n >= 1");
}

HJData make(BigReal A, int kappa, BigReal delta, DataVariant variant, SequenceId family, long bits) {
  return HJData{A.rounded(bits), kappa, delta.rounded(bits), variant, std::move(family)};
}

// Shared shape of the partition and overpartition exact data:
//   A = c (1/(S-1) - 3/S^2),  delta = c (1/(2 S (S-1)^2) - 3/S^4)^{1/2}.
std::pair<BigReal, BigReal> circle_method_data(const BigReal& S, const BigReal& c) {
  const long wp = S.prec();
  const BigReal one(1L, wp);
  if (!(S > one)) throw DomainError("exact data requires S > 1");
  const BigReal sm1 = S - one;
  const BigReal s2 = S * S;
  const BigReal A = c * (one / sm1 - BigReal(3L, wp) / s2);
  const BigReal radicand = one / (S * sm1 * sm1 * 2L) - BigReal(3L, wp) / (s2 * s2);
  if (radicand.sign() <= 0) throw DomainError("exact data: delta^2 <= 0 at this n");
  return {A, c * sqrt(radicand)};
}

}  // namespace

HJData data_partition(long n, DataVariant variant, const PrecisionContext& ctx) {
  ctx.validate();
  require_positive(n);
  const long wp = ctx.working_bits();
  const BigReal p = pi(wp);
  const BigReal nn(n, wp);
  if (variant == DataVariant::Exact) {
    // S = pi sqrt(2/3) sqrt(n - 1/24)
    const BigReal S = p * sqrt(BigReal(ExactRational(2, 3), wp) * (nn - BigReal(ExactRational(1, 24), wp)));
    auto [A, delta] = circle_method_data(S, p * p / 3L);
    return make(A, -1, delta, variant, SequenceId::partition(), ctx.bits);
  }
  const BigReal six(6L, wp);
  const BigReal A = p / (sqrt(six) * sqrt(nn));
  const BigReal delta = sqrt(p) / (sqrt(sqrt(six)) * pow(nn, BigReal(ExactRational(3, 4), wp)) * 2L);
  return make(A, -1, delta, variant, SequenceId::partition(), ctx.bits);
}

HJData data_overpartition(long n, DataVariant variant, const PrecisionContext& ctx) {
  ctx.validate();
  require_positive(n);
  const long wp = ctx.working_bits();
  const BigReal p = pi(wp);
  const BigReal nn(n, wp);
  if (variant == DataVariant::Exact) {
    auto [A, delta] = circle_method_data(p * sqrt(nn), p * p / 2L);
    return make(A, -1, delta, variant, SequenceId::overpartition(), ctx.bits);
  }
  const BigReal A = p / (sqrt(nn) * 2L);
  const BigReal delta = sqrt(p) / (sqrt(BigReal(8L, wp)) * pow(nn, BigReal(ExactRational(3, 4), wp)));
  return make(A, -1, delta, variant, SequenceId::overpartition(), ctx.bits);
}

HJData data_kregular(long k, long n, DataVariant variant, const PrecisionContext& ctx) {
  ctx.validate();
  if (k < 2) throw DomainError("k-regular data requires k >= 2");
  require_positive(n);
  const long wp = ctx.working_bits();
  const BigReal p = pi(wp);
  const BigReal frac(ExactRational(k - 1, k), wp);  // 1 - 1/k
  const SequenceId id = SequenceId::kregular(k);
  if (variant == DataVariant::Exact) {
    const BigReal kp = p * p * BigReal(ExactRational(2, 3), wp) * frac;
    const BigReal npp(ExactRational(n) + ExactRational(k - 1, 24), wp);
    const BigReal z = sqrt(kp * npp);
    const BigReal G = bessel_ratio_G(z, ctx.with_bits(wp));
    const BigReal one(1L, wp);
    const BigReal A = sqrt(kp / npp) * G / 2L - one / npp;
    const BigReal radicand = kp * npp / 2L * (G * G - one) - BigReal(2L, wp);
    if (radicand.sign() <= 0) throw DomainError("k-regular exact data: delta^2 <= 0 at this n");
    const BigReal delta = sqrt(radicand) / (npp * 2L);
    return make(A, -1, delta, variant, id, ctx.bits);
  }
  const BigReal nn(n, wp);
  const BigReal six(6L, wp);
  const BigReal A = p * sqrt(frac) / (sqrt(six) * sqrt(nn));
  const BigReal delta = sqrt(p) * sqrt(sqrt(frac)) /
                        (sqrt(sqrt(six)) * pow(nn, BigReal(ExactRational(3, 4), wp)) * 2L);
  return make(A, -1, delta, variant, id, ctx.bits);
}

HJData data_gamma(long n, const ExactRational& beta, DataVariant variant,
                  const PrecisionContext& ctx) {
  ctx.validate();
  const ExactRational t = beta + n;
  if (t <= 0) throw DomainError("Gamma data requires n + beta > 0");
  const long wp = ctx.working_bits();
  const BigReal T(t, wp);
  const SequenceId id = SequenceId::gamma(beta);
  if (variant == DataVariant::Exact) {
    const PrecisionContext inner = ctx.with_bits(wp);
    const BigReal A = digamma(T, inner);
    const BigReal delta = sqrt(polygamma(1, T, inner) / 2L);
    return make(A, 1, delta, variant, id, ctx.bits);
  }
  return make(log(T), 1, BigReal(1L, wp) / sqrt(T * 2L), variant, id, ctx.bits);
}

HJData data_powerexp(const ExactRational& a, const ExactRational& b, const ExactRational& c, long n,
                     const PrecisionContext& ctx) {
  ctx.validate();
  require_positive(n);
  if (!(b > 0 && b < 2)) throw DomainError("power-exp data requires 0 < b < 2");
  if (b == 1) throw DomainError("power-exp data requires b != 1");
  if (c == 0) throw DomainError("power-exp data requires c != 0");
  const long wp = ctx.working_bits();
  const int kappa = sgn(ExactRational(b * (b - 1) * c));
  const BigReal nn(n, wp);
  const BigReal bb(b, wp);
  const BigReal nb1 = pow(nn, bb - BigReal(1L, wp));  // n^{b-1}
  // A = -a/n + b c n^{b-1}; kappa delta^2 = -a/(2n^2) + b(b-1)c/(2 n^{2-b})
  const BigReal A = -BigReal(a, wp) / nn + BigReal(ExactRational(b * c), wp) * nb1;
  const BigReal kd2 = -BigReal(a, wp) / (nn * nn * 2L) +
                      BigReal(ExactRational(b * (b - 1) * c), wp) * nb1 / (nn * 2L);
  const BigReal d2 = kappa > 0 ? kd2 : -kd2;
  if (d2.sign() <= 0) throw DomainError("power-exp data: delta^2 <= 0 at this n");
  return make(A, kappa, sqrt(d2), DataVariant::Exact, SequenceId::power_exp(a, b, c), ctx.bits);
}

HJData data_neg_self_power(long n, const PrecisionContext& ctx) {
  ctx.validate();
  require_positive(n);
  const long wp = ctx.working_bits();
  const BigReal nn(n, wp);
  return make(-BigReal(1L, wp) - log(nn), -1, BigReal(1L, wp) / sqrt(nn * 2L), DataVariant::Exact,
              SequenceId::neg_self_power(), ctx.bits);
}

bool has_simplified_variant(const SequenceId& id) {
  const Family f = id.family;
  return f != Family::PowerExp && f != Family::NegSelfPower;
}

HJData data_for(const SequenceId& id, long n, DataVariant variant, const PrecisionContext& ctx) {
  id.validate();
  HJData data;
  switch (id.family) {
    case Family::Partition:
      data = data_partition(n, variant, ctx);
      break;
    case Family::Overpartition:
      data = data_overpartition(n, variant, ctx);
      break;
    case Family::KRegular:
      data = data_kregular(id.k, n, variant, ctx);
      break;
    case Family::Gamma:
      data = data_gamma(n, id.beta, variant, ctx);
      break;
    case Family::PowerExp:
      data = data_powerexp(id.a, id.b, id.c, n, ctx);
      break;
    case Family::NegSelfPower:
      data = data_neg_self_power(n, ctx);
      break;
  }
  if (id.reciprocal) {
    data.A = -data.A;
    data.kappa = -data.kappa;
  }
  data.family = id;
  return data;
}

// ---------------------------------------------------------------------- rho

std::vector<ExactRational> rho_tail_coefficients(long r) {
  if (r < 1) throw DomainError("rho requires r >= 1");
  static std::mutex mutex;
  static std::map<long, std::vector<ExactRational>> memo;
  std::lock_guard lock(mutex);
  if (auto it = memo.find(r); it != memo.end()) return it->second;
  std::vector<ExactRational> a;
  for (long i = 1; i <= r; ++i) a.push_back(binomial(ExactRational(-1, 2), i));
  std::vector<ExactRational> out;
  for (long u = 1; u <= r; ++u) {
    ExactRational v = de_moivre(r, u, a) / ExactRational(u);
    v.canonicalize();
    out.push_back(std::move(v));
  }
  memo.emplace(r, out);
  return out;
}

BigReal rho(long r, const BigReal& x, const PrecisionContext& ctx) {
  ctx.validate();
  if (r < 1) throw DomainError("rho requires r >= 1");
  const long wp = ctx.working_bits();
  const BigReal xx = x.rounded(std::max(wp, x.prec()));
  const BigReal one(1L, wp);
  if (!(xx > one)) throw DomainError("rho requires x > 1");
  const std::vector<ExactRational> tail = rho_tail_coefficients(r);
  BigReal value(ExactRational((r % 2 == 0) ? 1 : -1, r), wp);
  value += BigReal(binomial(ExactRational(1, 2), r), wp) * xx;
  const BigReal inv = one / (xx - one);
  BigReal power = inv;
  for (long u = 1; u <= r; ++u) {
    value -= BigReal(tail[static_cast<std::size_t>(u - 1)], wp) * power;
    power *= inv;
  }
  return value.rounded(ctx.bits);
}

}  // namespace jensen
