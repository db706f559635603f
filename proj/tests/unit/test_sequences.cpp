#include <doctest.h>

#include <thread>

#include "jensen/errors.hpp"
#include "jensen/sequences.hpp"
#include "oracles.hpp"

using namespace jensen;

namespace {
const PrecisionContext kCtx{.bits = 128};

bool close(const BigReal& a, const BigReal& b, long bits) {
  return relative_difference(a, b) < BigReal(ExactRational(1) / (ExactInteger(1) << bits), 256);
}
}  // namespace

TEST_CASE("small values") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(10) == 42);
  CHECK(overpartition_count(0) == 1);
  CHECK(overpartition_count(3) == 8);
  CHECK(overpartition_count(4) == 14);
  CHECK(k_regular_count(2, 10) == 10);
  CHECK(k_regular_count(2, 0) == 1);
  CHECK(k_regular_count(3, 4) == 4);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(partition_count(-1), DomainError);
  CHECK_THROWS_AS(overpartition_count(-3), DomainError);
  CHECK_THROWS_AS(k_regular_count(1, 5), DomainError);
  CHECK_THROWS_AS(SequenceId::kregular(1).validate(), DomainError);
  CHECK_THROWS_AS(sequence_term(SequenceId::gamma(-2), 2, kCtx), DomainError);
  CHECK_THROWS_AS(sequence_term(SequenceId::neg_self_power(), 0, kCtx), DomainError);
}

TEST_CASE("enumeration oracle up to 60") {
  for (long n = 0; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(partition_count(n) == oracle::enumerate_partitions(n));
    CHECK(k_regular_count(2, n) == oracle::enumerate_partitions(n, 2));
    CHECK(k_regular_count(3, n) == oracle::enumerate_partitions(n, 3));
  }
}

TEST_CASE("overpartitions: convolution and product expansion agree to 500") {
  const auto product = oracle::overpartition_product(500);
  for (long n = 0; n <= 500; ++n) {
    ExactInteger conv = 0;
    for (long r = 0; r <= n; ++r) conv += partition_count(r) * k_regular_count(2, n - r);
    CAPTURE(n);
    REQUIRE(overpartition_count(n) == product[n]);
    REQUIRE(conv == product[n]);
  }
}

TEST_CASE("overpartitions above the dense limit") {
  // sparse path against the dense one through the convolution identity
  const long n = SequenceStore::kDenseOverpartitionLimit + 7;
  ExactInteger conv = 0;
  for (long r = 0; r <= n; ++r) conv += partition_count(r) * k_regular_count(2, n - r);
  CHECK(overpartition_count(n) == conv);
}

TEST_CASE("k-regular: pentagonal convolution against the divisor recurrence") {
  for (long k : {2, 3, 5, 7}) {
    const auto ref = k_regular_divisor_recurrence(k, 300);
    for (long n = 0; n <= 300; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      REQUIRE(k_regular_count(k, n) == ref[n]);
    }
  }
}

TEST_CASE("monotone for n >= 1") {
  for (long n = 1; n < 400; ++n) {
    REQUIRE(partition_count(n + 1) >= partition_count(n));
    REQUIRE(overpartition_count(n + 1) >= overpartition_count(n));
    REQUIRE(k_regular_count(2, n + 1) >= k_regular_count(2, n));
    REQUIRE(k_regular_count(4, n + 1) >= k_regular_count(4, n));
  }
}

TEST_CASE("known large value") {
  CHECK(partition_count(1000).get_str() == "24061467864032622473692149727991");
}

TEST_CASE("cache determinism under interleaved range queries") {
  SequenceStore a;
  SequenceStore b;
  const SequenceId id = SequenceId::partition();
  // one store grows in small steps, the other in one go from several threads
  for (long hi = 10; hi <= 900; hi += 89) a.cache(id).range(0, hi);
  std::vector<std::thread> threads;
  for (long t = 0; t < 4; ++t) {
    threads.emplace_back([&b, &id, t] { b.cache(id).range(t * 100, 900 - t * 50); });
  }
  for (auto& t : threads) t.join();
  CHECK(a.cache(id).range(0, 900) == b.cache(id).range(0, 900));
}

TEST_CASE("real terms") {
  CHECK(sequence_term(SequenceId::gamma(0), 5, kCtx) == 24.0);
  const BigReal e3 = sequence_term(SequenceId::power_exp(0, 1, 1), 3, kCtx);
  CHECK(close(e3, exp(BigReal(3, 256)), 120));
  CHECK(sequence_term(SequenceId::neg_self_power(), 2, kCtx) == 0.25);
  CHECK(rational_term(SequenceId::reciprocal_of(SequenceId::partition()), 10) == ExactRational(1, 42));
}

TEST_CASE("log ratios") {
  CHECK(close(log_ratio(SequenceId::partition(), 1, 1, kCtx), log(BigReal(2, 256)), 120));
  CHECK(log_ratio(SequenceId::partition(), 50, 0, kCtx).is_zero());
  CHECK(log_ratio(SequenceId::power_exp(1, ExactRational(1, 2), 3), 50, 0, kCtx).is_zero());
  CHECK(close(log_ratio(SequenceId::gamma(0), 4, 1, kCtx), log(BigReal(4, 256)), 120));
  // PowerExp: log((n+j)/n) * a + c ((n+j)^b - n^b)
  const BigReal lr = log_ratio(SequenceId::power_exp(2, ExactRational(1, 2), 3), 100, 21, kCtx);
  const BigReal ref = log(BigReal(ExactRational(121, 100), 256)) * 2 + BigReal(3 * (11 - 10), 256);
  CHECK(close(lr, ref, 120));
}

TEST_CASE("exact ratios") {
  CHECK(*exact_ratio(SequenceId::partition(), 9, 1) == ExactRational(7, 5));
  CHECK(*exact_ratio(SequenceId::gamma(ExactRational(1, 2)), 3, 2) == ExactRational(7, 2) * ExactRational(9, 2));
  CHECK_FALSE(exact_ratio(SequenceId::power_exp(0, ExactRational(1, 2), 1), 3, 1).has_value());
  CHECK(*exact_ratio(SequenceId::reciprocal_of(SequenceId::gamma(0)), 4, 1) == ExactRational(1, 4));
}
