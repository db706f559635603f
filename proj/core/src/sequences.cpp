#include "jensen/sequences.hpp"

#include <algorithm>

#include "jensen/errors.hpp"

namespace jensen {

namespace {

void require_index(long n) {
  if (n < 0) throw DomainError("sequence index must be >= 0, got " + std::to_string(n));
}

// Generalized pentagonal numbers m(3m-1)/2 for m = 1, -1, 2, -2, ... with signs
// (-1)^(m+1); invokes fn(offset, sign) while offset <= limit.
template <typename Fn>
void for_each_pentagonal(long limit, Fn&& fn) {
  for (long m = 1;; ++m) {
    const long g1 = m * (3 * m - 1) / 2;
    if (g1 > limit) break;
    const int sign = (m % 2 == 1) ? 1 : -1;
    fn(g1, sign);
    const long g2 = m * (3 * m + 1) / 2;
    if (g2 > limit) continue;
    fn(g2, sign);
  }
}

ExactRational rational_power(long base, long exponent) {
  ExactInteger p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return ExactRational(p);
  return ExactRational(ExactInteger(1), p);
}

}  // namespace

// ---------------------------------------------------------------- SequenceId

SequenceId SequenceId::partition() { return SequenceId{}; }

SequenceId SequenceId::overpartition() {
  SequenceId id;
  id.family = Family::Overpartition;
  return id;
}

SequenceId SequenceId::kregular(long k) {
  SequenceId id;
  id.family = Family::KRegular;
  id.k = k;
  id.validate();
  return id;
}

SequenceId SequenceId::gamma(const ExactRational& beta) {
  SequenceId id;
  id.family = Family::Gamma;
  id.beta = beta;
  id.validate();
  return id;
}

SequenceId SequenceId::power_exp(const ExactRational& a, const ExactRational& b,
                                 const ExactRational& c) {
  SequenceId id;
  id.family = Family::PowerExp;
  id.a = a;
  id.b = b;
  id.c = c;
  id.validate();
  return id;
}

SequenceId SequenceId::neg_self_power() {
  SequenceId id;
  id.family = Family::NegSelfPower;
  return id;
}

SequenceId SequenceId::reciprocal_of(const SequenceId& inner) {
  if (inner.reciprocal) throw DomainError("ReciprocalOf may not be nested");
  SequenceId id = inner;
  id.reciprocal = true;
  return id;
}

SequenceId SequenceId::base() const {
  SequenceId id = *this;
  id.reciprocal = false;
  return id;
}

bool SequenceId::is_integer_family() const {
  return !reciprocal && (family == Family::Partition || family == Family::Overpartition ||
                         family == Family::KRegular);
}

bool SequenceId::has_rational_terms() const {
  return family == Family::Partition || family == Family::Overpartition ||
         family == Family::KRegular || family == Family::NegSelfPower;
}

bool SequenceId::has_rational_ratios() const { return family != Family::PowerExp; }

long SequenceId::first_index() const {
  switch (family) {
    case Family::PowerExp:
    case Family::NegSelfPower:
      return 1;
    case Family::Gamma:
      return beta > 0 ? 0 : 1;
    default:
      return 0;
  }
}

void SequenceId::validate() const {
  switch (family) {
    case Family::KRegular:
      if (k < 2) throw DomainError("KRegular requires k >= 2, got k = " + std::to_string(k));
      break;
    case Family::Gamma:
      if (beta < 0 || beta > 1) {
        throw DomainError("Gamma requires 0 <= beta <= 1, got beta = " + to_string(beta));
      }
      break;
    case Family::PowerExp:
      if (a == 0 && c == 0) throw DomainError("PowerExp requires (a, c) not both 0");
      break;
    default:
      break;
  }
}

std::string SequenceId::name() const {
  std::string s;
  switch (family) {
    case Family::Partition:
      s = "partition";
      break;
    case Family::Overpartition:
      s = "overpartition";
      break;
    case Family::KRegular:
      s = "kregular(k=" + std::to_string(k) + ")";
      break;
    case Family::Gamma:
      s = "gamma(beta=" + to_string(beta) + ")";
      break;
    case Family::PowerExp:
      s = "powerexp(a=" + to_string(a) + ",b=" + to_string(b) + ",c=" + to_string(c) + ")";
      break;
    case Family::NegSelfPower:
      s = "negselfpower";
      break;
  }
  return reciprocal ? "reciprocal(" + s + ")" : s;
}

// ------------------------------------------------------------- SequenceCache

SequenceCache::SequenceCache(SequenceStore& store, SequenceId id)
    : store_(store), id_(std::move(id)) {
  if (!id_.is_integer_family()) throw UnsupportedError("only integer families are cached");
}

long SequenceCache::high_water() const {
  std::shared_lock lock(mutex_);
  return static_cast<long>(terms_.size());
}

void SequenceCache::ensure(long n) {
  require_index(n);
  {
    std::shared_lock lock(mutex_);
    if (n < static_cast<long>(terms_.size())) return;
  }
  std::unique_lock lock(mutex_);
  fill_locked(n);
}

ExactInteger SequenceCache::at(long n) {
  ensure(n);
  std::shared_lock lock(mutex_);
  return terms_[static_cast<size_t>(n)];
}

std::vector<ExactInteger> SequenceCache::range(long lo, long hi) {
  require_index(lo);
  if (hi < lo) return {};
  ensure(hi);
  std::shared_lock lock(mutex_);
  return {terms_.begin() + lo, terms_.begin() + hi + 1};
}

void SequenceCache::fill_locked(long n) {
  const long start = static_cast<long>(terms_.size());
  if (n < start) return;
  if (static_cast<long>(terms_.capacity()) <= n) {
    terms_.reserve(static_cast<size_t>(std::max<long>(n + 1, 2 * static_cast<long>(terms_.capacity()))));
  }
  switch (id_.family) {
    case Family::Partition: {
      for (long m = start; m <= n; ++m) {
        if (m == 0) {
          terms_.emplace_back(1);
          continue;
        }
        ExactInteger acc = 0;
        for_each_pentagonal(m, [&](long g, int sign) {
          if (sign > 0) {
            acc += terms_[static_cast<size_t>(m - g)];
          } else {
            acc -= terms_[static_cast<size_t>(m - g)];
          }
        });
        terms_.push_back(std::move(acc));
      }
      break;
    }
    case Family::KRegular: {
      // prod (1 - q^{kj}) is the pentagonal series in q^k, so
      // b_k(m) = sum_g (-1)^g p(m - k g) over generalized pentagonal g.
      const long k = id_.k;
      store_.cache(SequenceId::partition()).with_terms(n, [&](const std::vector<ExactInteger>& p) {
        for (long m = start; m <= n; ++m) {
          ExactInteger acc = p[static_cast<size_t>(m)];
          for_each_pentagonal(m / k, [&](long g, int sign) {
            // sign here is (-1)^(g_index+1); the product carries (-1)^g_index
            if (sign > 0) {
              acc -= p[static_cast<size_t>(m - k * g)];
            } else {
              acc += p[static_cast<size_t>(m - k * g)];
            }
          });
          terms_.push_back(std::move(acc));
        }
        return 0;
      });
      break;
    }
    case Family::Overpartition: {
      auto& pc = store_.cache(SequenceId::partition());
      auto& bc = store_.cache(SequenceId::kregular(2));
      pc.ensure(n);
      bc.ensure(n);
      // Lock order is always kregular(2) before partition, matching the
      // k-regular filler.
      bc.with_terms(n, [&](const std::vector<ExactInteger>& b2) {
        return pc.with_terms(n, [&](const std::vector<ExactInteger>& p) {
          for (long m = start; m <= n; ++m) {
            ExactInteger acc = 0;
            for (long r = 0; r <= m; ++r) {
              mpz_addmul(acc.get_mpz_t(), p[static_cast<size_t>(r)].get_mpz_t(),
                         b2[static_cast<size_t>(m - r)].get_mpz_t());
            }
            terms_.push_back(std::move(acc));
          }
          return 0;
        });
      });
      break;
    }
    default:
      throw UnsupportedError("no exact filler for " + id_.name());
  }
}

// ------------------------------------------------------------- SequenceStore

SequenceCache& SequenceStore::cache(const SequenceId& id) {
  if (!id.is_integer_family()) throw UnsupportedError(id.name() + " is not an integer family");
  std::lock_guard lock(caches_mutex_);
  auto& slot = caches_[id.name()];
  if (!slot) slot = std::make_unique<SequenceCache>(*this, id);
  return *slot;
}

ExactInteger SequenceStore::partition(long n) {
  require_index(n);
  return cache(SequenceId::partition()).at(n);
}

ExactInteger SequenceStore::kregular(long k, long n) {
  if (k < 2) throw DomainError("k_regular_count requires k >= 2, got k = " + std::to_string(k));
  require_index(n);
  return cache(SequenceId::kregular(k)).at(n);
}

ExactInteger SequenceStore::overpartition(long n) {
  require_index(n);
  if (n <= kDenseOverpartitionLimit) return cache(SequenceId::overpartition()).at(n);
  {
    std::lock_guard lock(sparse_mutex_);
    auto it = sparse_overpartitions_.find(n);
    if (it != sparse_overpartitions_.end()) return it->second;
  }
  ExactInteger value = overpartition_by_convolution(n);
  std::lock_guard lock(sparse_mutex_);
  sparse_overpartitions_.emplace(n, value);
  return value;
}

ExactInteger SequenceStore::overpartition_by_convolution(long n) {
  auto& pc = cache(SequenceId::partition());
  auto& bc = cache(SequenceId::kregular(2));
  pc.ensure(n);
  bc.ensure(n);
  return bc.with_terms(n, [&](const std::vector<ExactInteger>& b2) {
    return pc.with_terms(n, [&](const std::vector<ExactInteger>& p) {
      ExactInteger acc = 0;
      for (long r = 0; r <= n; ++r) {
        mpz_addmul(acc.get_mpz_t(), p[static_cast<size_t>(r)].get_mpz_t(),
                   b2[static_cast<size_t>(n - r)].get_mpz_t());
      }
      return acc;
    });
  });
}

SequenceStore& default_store() {
  static SequenceStore store;
  return store;
}

ExactInteger partition_count(long n) { return default_store().partition(n); }
ExactInteger overpartition_count(long n) { return default_store().overpartition(n); }
ExactInteger k_regular_count(long k, long n) { return default_store().kregular(k, n); }

std::vector<ExactInteger> k_regular_divisor_recurrence(long k, long n_max) {
  if (k < 2) throw DomainError("k_regular_divisor_recurrence requires k >= 2");
  require_index(n_max);
  std::vector<ExactInteger> s(static_cast<size_t>(n_max + 1), 0);
  for (long d = 1; d <= n_max; ++d) {
    if (d % k == 0) continue;
    for (long m = d; m <= n_max; m += d) s[static_cast<size_t>(m)] += d;
  }
  std::vector<ExactInteger> b(static_cast<size_t>(n_max + 1));
  b[0] = 1;
  for (long m = 1; m <= n_max; ++m) {
    ExactInteger acc = 0;
    for (long i = 1; i <= m; ++i) {
      mpz_addmul(acc.get_mpz_t(), s[static_cast<size_t>(i)].get_mpz_t(),
                 b[static_cast<size_t>(m - i)].get_mpz_t());
    }
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
    b[static_cast<size_t>(m)] = std::move(acc);
  }
  return b;
}

// ------------------------------------------------------------ term access

ExactInteger integer_term(const SequenceId& id, long n) {
  require_index(n);
  if (!id.is_integer_family()) throw UnsupportedError(id.name() + " is not an integer family");
  switch (id.family) {
    case Family::Partition:
      return partition_count(n);
    case Family::Overpartition:
      return overpartition_count(n);
    case Family::KRegular:
      return k_regular_count(id.k, n);
    default:
      throw UnsupportedError(id.name() + " is not an integer family");
  }
}

ExactRational rational_term(const SequenceId& id, long n) {
  if (!id.has_rational_terms()) throw UnsupportedError(id.name() + " has irrational terms");
  if (n < id.first_index()) {
    throw DomainError(id.name() + " is undefined at n = " + std::to_string(n));
  }
  ExactRational value;
  if (id.family == Family::NegSelfPower) {
    value = rational_power(n, -n);
  } else {
    value = ExactRational(integer_term(id.base(), n));
  }
  if (id.reciprocal) {
    value = 1 / value;
    value.canonicalize();
  }
  return value;
}

std::optional<ExactRational> exact_ratio(const SequenceId& id, long n, long j) {
  id.validate();
  if (j < 0) throw DomainError("log_ratio/exact_ratio require j >= 0");
  if (n < id.first_index()) {
    throw DomainError(id.name() + " is undefined at n = " + std::to_string(n));
  }
  if (!id.has_rational_ratios()) return std::nullopt;
  if (j == 0) return ExactRational(1);
  ExactRational ratio;
  if (id.family == Family::Gamma) {
    // Gamma(n+j+beta)/Gamma(n+beta) = prod_{i<j} (n+beta+i)
    ratio = 1;
    for (long i = 0; i < j; ++i) ratio *= id.beta + n + i;
    if (id.reciprocal) ratio = 1 / ratio;
  } else {
    ratio = rational_term(id, n + j) / rational_term(id, n);
  }
  ratio.canonicalize();
  return ratio;
}

BigReal sequence_term(const SequenceId& id, long n, const PrecisionContext& ctx) {
  id.validate();
  if (n < id.first_index()) {
    throw DomainError(id.name() + " is undefined at n = " + std::to_string(n));
  }
  const long wp = ctx.working_bits();
  BigReal value(wp);
  if (id.has_rational_terms()) {
    return BigReal(rational_term(id, n), ctx.bits);
  }
  if (id.family == Family::Gamma) {
    value = gamma_fn(BigReal(id.beta + n, wp));
  } else {  // PowerExp
    const BigReal nn(n, wp);
    const BigReal logn = log(nn);
    value = exp(BigReal(id.a, wp) * logn + BigReal(id.c, wp) * exp(BigReal(id.b, wp) * logn));
  }
  if (id.reciprocal) value = BigReal(1L, wp) / value;
  return value.rounded(ctx.bits);
}

BigReal log_ratio(const SequenceId& id, long n, long j, const PrecisionContext& ctx) {
  const auto ratio = exact_ratio(id, n, j);
  const long wp = ctx.working_bits();
  if (ratio) {
    if (*ratio == 1) return BigReal(ctx.bits);
    return log(BigReal(*ratio, wp)).rounded(ctx.bits);
  }
  // PowerExp: a log((n+j)/n) + c ((n+j)^b - n^b); the difference cancels
  // about log2(n) bits, so carry extra precision.
  const long xp = wp + 64;
  const BigReal logn = log(BigReal(n, xp));
  const BigReal lognj = log(BigReal(n + j, xp));
  const BigReal bb(id.b, xp);
  BigReal value = BigReal(id.a, xp) * (lognj - logn) +
                  BigReal(id.c, xp) * (exp(bb * lognj) - exp(bb * logn));
  if (id.reciprocal) value = -value;
  return value.rounded(ctx.bits);
}

BigReal real_ratio(const SequenceId& id, long n, long j, long prec) {
  const auto ratio = exact_ratio(id, n, j);
  if (ratio) return BigReal(*ratio, prec);
  PrecisionContext ctx;
  ctx.bits = prec + 32;
  return exp(log_ratio(id, n, j, ctx)).rounded(prec);
}

}  // namespace jensen
