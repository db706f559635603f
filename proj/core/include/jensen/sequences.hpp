#pragma once

// Exact and extended-precision sequence families.
//
// Integer families (partitions, overpartitions, k-regular partitions) are
// computed exactly and cached per family; the real-valued families (Gamma,
// power-exponential, n^-n) are evaluated on demand.  Every family exposes the
// ratio alpha(n+j)/alpha(n), exactly whenever the ratio is rational.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "jensen/numeric.hpp"

namespace jensen {

enum class Family { Partition, Overpartition, KRegular, Gamma, PowerExp, NegSelfPower };

// Tagged descriptor of a sequence family.  ReciprocalOf is represented by the
// `reciprocal` flag on top of a base family, which caps the nesting depth at one.
struct SequenceId {
  Family family = Family::Partition;
  long k = 0;              // KRegular
  ExactRational beta = 0;  // Gamma: alpha(n) = Gamma(n + beta)
  ExactRational a = 0;     // PowerExp: alpha(n) = n^a exp(c n^b)
  ExactRational b = 0;
  ExactRational c = 0;
  bool reciprocal = false;

  static SequenceId partition();
  static SequenceId overpartition();
  static SequenceId kregular(long k);
  static SequenceId gamma(const ExactRational& beta);
  static SequenceId power_exp(const ExactRational& a, const ExactRational& b,
                              const ExactRational& c);
  static SequenceId neg_self_power();
  static SequenceId reciprocal_of(const SequenceId& inner);

  SequenceId base() const;
  // Partition, Overpartition, KRegular (not reciprocal).
  bool is_integer_family() const;
  // alpha(n) itself is rational: integer families, n^-n and their reciprocals.
  bool has_rational_terms() const;
  // alpha(n+j)/alpha(n) is rational: everything except PowerExp.
  bool has_rational_ratios() const;
  // Smallest n at which alpha(n) is defined.
  long first_index() const;

  void validate() const;
  std::string name() const;

  friend bool operator==(const SequenceId&, const SequenceId&) = default;
};

// Append-only dense cache of one integer family.  Growth doubles capacity.
// Reads take a shared lock; fills are serialized by an exclusive lock.
class SequenceStore;

class SequenceCache {
 public:
  SequenceCache(SequenceStore& store, SequenceId id);

  const SequenceId& id() const { return id_; }
  ExactInteger at(long n);
  std::vector<ExactInteger> range(long lo, long hi);  // inclusive
  void ensure(long n);
  long high_water() const;  // number of cached terms

  // Runs fn(terms) under a shared lock after making sure terms[0..n] exist.
  template <typename Fn>
  decltype(auto) with_terms(long n, Fn&& fn) {
    ensure(n);
    std::shared_lock lock(mutex_);
    return fn(static_cast<const std::vector<ExactInteger>&>(terms_));
  }

 private:
  void fill_locked(long n);

  SequenceStore& store_;
  SequenceId id_;
  mutable std::shared_mutex mutex_;
  std::vector<ExactInteger> terms_;
};

// Owns one cache per integer family.  Distinct families fill independently.
class SequenceStore {
 public:
  SequenceStore() = default;
  SequenceStore(const SequenceStore&) = delete;
  SequenceStore& operator=(const SequenceStore&) = delete;

  SequenceCache& cache(const SequenceId& id);

  ExactInteger partition(long n);
  ExactInteger kregular(long k, long n);
  ExactInteger overpartition(long n);

  // Overpartitions are filled densely up to this index (the convolution costs
  // O(n) per term); larger indices are computed individually and memoized.
  static constexpr long kDenseOverpartitionLimit = 4096;

 private:
  friend class SequenceCache;
  ExactInteger overpartition_by_convolution(long n);

  std::mutex caches_mutex_;
  std::map<std::string, std::unique_ptr<SequenceCache>> caches_;
  std::mutex sparse_mutex_;
  std::map<long, ExactInteger> sparse_overpartitions_;
};

SequenceStore& default_store();

// p(n) by Euler's pentagonal-number recurrence.
ExactInteger partition_count(long n);
// Overpartitions via sum_{r} p(r) b_2(n - r).
ExactInteger overpartition_count(long n);
// b_k(n): partitions of n with no part divisible by k.
ExactInteger k_regular_count(long k, long n);

// b_k(0..n_max) from n b(n) = sum_i s_k(i) b(n-i), s_k(i) = sum of divisors of i
// not divisible by k.  Quadratic; kept as an independent route for cross-checks.
std::vector<ExactInteger> k_regular_divisor_recurrence(long k, long n_max);

// Integer families only.
ExactInteger integer_term(const SequenceId& id, long n);
// Rational families only (see SequenceId::has_rational_terms).
ExactRational rational_term(const SequenceId& id, long n);
// alpha(n+j)/alpha(n) when rational, std::nullopt for PowerExp.
std::optional<ExactRational> exact_ratio(const SequenceId& id, long n, long j);

// alpha(n) at ctx precision.
BigReal sequence_term(const SequenceId& id, long n, const PrecisionContext& ctx);
// log(alpha(n+j)/alpha(n)); from the exact ratio when it is rational.
BigReal log_ratio(const SequenceId& id, long n, long j, const PrecisionContext& ctx);
// alpha(n+j)/alpha(n) rounded to `prec` bits.
BigReal real_ratio(const SequenceId& id, long n, long j, long prec);

}  // namespace jensen
