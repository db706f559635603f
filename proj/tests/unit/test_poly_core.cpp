#include <doctest.h>

#include <random>

#include "jensen/analysis.hpp"
#include "jensen/errors.hpp"
#include "oracles.hpp"

using namespace jensen;

namespace {

using Q = ExactRational;

RationalPolynomial P(std::vector<Q> c) { return RationalPolynomial(std::move(c)); }

BigReal two_pow(long e) {
  BigReal x(1, 256);
  mpfr_mul_2si(x.get(), x.get(), e, MPFR_RNDN);
  return x;
}

}  // namespace

TEST_CASE("De Moivre polynomials") {
  const std::vector<Q> a{3, 5};
  // compositions of 3 into two parts: (1,2), (2,1)
  CHECK(de_moivre(3, 2, a) == 2 * 3 * 5);
  CHECK(de_moivre(2, 3, a) == 0);
  CHECK(de_moivre(0, 0, a) == 1);
  CHECK(de_moivre(4, 0, a) == 0);
  // A_{n,k}(x, y, 0, ...) = binom(k, n-k) x^{2k-n} y^{n-k}
  const Q x(2, 3), y(-5, 7);
  for (long k = 0; k <= 8; ++k) {
    for (long n = k; n <= 2 * k; ++n) {
      Q ref = Q(binomial(k, n - k));
      for (long i = 0; i < 2 * k - n; ++i) ref *= x;
      for (long i = 0; i < n - k; ++i) ref *= y;
      CHECK(de_moivre(n, k, std::vector<Q>{x, y}) == ref);
    }
  }
}

TEST_CASE("De Moivre homogeneity on random rationals") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Q> a(8), ca(8);
    Q c(num(rng), den(rng));
    c.canonicalize();
    Q cp = 1;
    for (int i = 0; i < 8; ++i) {
      a[i] = Q(num(rng), den(rng));
      a[i].canonicalize();
      cp *= c;
      ca[i] = cp * a[i];
    }
    for (long n = 0; n <= 8; ++n) {
      for (long k = 0; k <= n; ++k) {
        Q cn = 1;
        for (long i = 0; i < n; ++i) cn *= c;
        REQUIRE(de_moivre(n, k, ca) == cn * de_moivre(n, k, a));
      }
    }
  }
}

TEST_CASE("Jensen polynomials") {
  CHECK(jensen_poly(SequenceId::partition(), 2, 0) == P({1, 2, 2}));
  CHECK(jensen_poly(SequenceId::partition(), 1, 1) == P({1, 2}));
  CHECK(reciprocal_jensen(SequenceId::partition(), 2, 0) == P({2, 2, 1}));
  // constant sequence: (1 + X)^d, palindromic
  for (long d = 1; d <= 6; ++d) {
    const std::vector<Q> ones(d + 1, 1);
    RationalPolynomial ref = P({1});
    for (long i = 0; i < d; ++i) ref = ref * P({1, 1});
    CHECK(jensen_from_terms(ones) == ref);
    CHECK(jensen_from_terms(ones).reversed(d) == ref);
  }
}

TEST_CASE("reversal on every rational family") {
  const std::vector<SequenceId> ids{SequenceId::partition(),
                                    SequenceId::overpartition(),
                                    SequenceId::kregular(3),
                                    SequenceId::neg_self_power(),
                                    SequenceId::reciprocal_of(SequenceId::partition()),
                                    SequenceId::reciprocal_of(SequenceId::kregular(2))};
  for (const auto& id : ids) {
    for (long d = 1; d <= 6; ++d) {
      for (long n = id.first_index(); n <= 60; n += 7) {
        REQUIRE(reciprocal_jensen(id, d, n) == jensen_poly(id, d, n).reversed(d));
      }
    }
  }
  const PrecisionContext ctx{.bits = 128};
  const auto pe = SequenceId::power_exp(1, Q(1, 2), 2);
  const auto J = jensen_poly_real(pe, 4, 10, ctx);
  const auto K = reciprocal_jensen_real(pe, 4, 10, ctx);
  CHECK(K == J.reversed(4));
}

TEST_CASE("Hermite targets") {
  CHECK(hermite_target(2, HermiteVariant::Real) == P({-2, 0, 1}));
  CHECK(hermite_target(3, HermiteVariant::Real) == P({0, -6, 0, 1}));
  CHECK(hermite_target(2, HermiteVariant::Imag) == P({2, 0, 1}));
  CHECK(hermite_target(0, HermiteVariant::Real) == P({1}));
  CHECK(hermite_target(0, HermiteVariant::Imag) == P({1}));
  for (long d = 0; d <= 12; ++d) {
    const auto h = oracle::hermite_recurrence(d);
    std::vector<Q> c(h.begin(), h.end());
    CHECK(hermite_physicists(d) == P(c));
    // H_d(X/2) from the recurrence
    Q scale = 1;
    for (auto& x : c) {
      x *= scale;
      scale /= 2;
    }
    CHECK(hermite_target(d, HermiteVariant::Real) == P(c));
  }
  for (long d = 2; d <= 10; ++d) {
    const auto real = hermite_target(d, HermiteVariant::Real);
    const auto imag = hermite_target(d, HermiteVariant::Imag);
    CHECK(real.coeff(d - 2) == -2 * Q(binomial(d, 2)));
    CHECK(imag.coeff(d - 2) == 2 * Q(binomial(d, 2)));
    if (d >= 4) CHECK(real.coeff(d - 4) == 12 * Q(binomial(d, 4)));
  }
}

TEST_CASE("Laguerre polynomials") {
  const Q r(5, 3);
  CHECK(laguerre(1, r) == P({r + 1, -1}));
  CHECK(laguerre(0, r) == P({1}));
  CHECK(laguerre(2, 0) == P({1, -2, Q(1, 2)}));
  CHECK_THROWS_AS(laguerre(3, -2), DomainError);
  CHECK_NOTHROW(laguerre(3, Q(-3, 2)));
  for (long d = 1; d <= 6; ++d) {
    for (Q rr : {Q(1), Q(1, 2), Q(7), Q(-1, 3)}) {
      CHECK(laguerre_shift_identity(d, rr));
      CHECK(laguerre_reciprocal(d, rr) == laguerre(d, rr).reversed(d));
    }
  }
}

TEST_CASE("Laguerre-Jensen identity for 1/Gamma") {
  for (Q beta : {Q(0), Q(1, 2), Q(1, 3)}) {
    const auto id = SequenceId::reciprocal_of(SequenceId::gamma(beta));
    for (long d = 1; d <= 6; ++d) {
      for (long n : {1, 4, 30}) {
        // J / alpha(n) = d! Gamma(n+beta)/Gamma(n+d+beta) L_d^{(n+beta-1)}(-X)
        Q factor = Q(factorial(d));
        for (long i = 0; i < d; ++i) factor /= (n + beta + i);
        auto lag = compose_affine(laguerre(d, n + beta - 1), 0, -1);
        CHECK(scaled_jensen_poly(id, d, n) == lag * factor);
      }
    }
  }
  // unscaled, at working precision
  const PrecisionContext ctx{.bits = 192};
  const auto id = SequenceId::reciprocal_of(SequenceId::gamma(0));
  const long d = 4, n = 6;
  const Q factor = Q(factorial(d)) / Q(factorial(n + d - 1));
  const auto ref = to_real(compose_affine(laguerre(d, n - 1), 0, -1) * factor, 192);
  CHECK(sup_distance(jensen_poly_real(id, d, n, ctx), ref) < two_pow(-150));
}

TEST_CASE("sigma, forward differences and Stirling numbers") {
  CHECK(sigma(3, 1, 1) == 0);
  CHECK(sigma(3, 1, 2) == 2);
  for (long d = 0; d <= 12; ++d) {
    CHECK(sigma(d, d, 0) == 1);
    for (long k = 0; k <= d; ++k) {
      for (long r = 0; r < d - k; ++r) REQUIRE(sigma(d, k, r) == 0);
      const ExactInteger sign = (d - k) % 2 == 0 ? 1 : -1;
      REQUIRE(sigma(d, k, d - k) == sign * factorial(d - k));
    }
  }
  const std::vector<Q> v{1, 2, 4};
  CHECK(forward_difference(v, 2) == 1);
  for (long k = 0; k <= 10; ++k) {
    CHECK(stirling_subset(k, k) == 1);
    CHECK(stirling_subset(k, k + 1) == 0);
  }
  CHECK(stirling_subset(2, 3) == 0);
  CHECK(stirling_subset(10, 3) == 9330);
  CHECK(stirling_subset(70, 2) == (ExactInteger(1) << 69) - 1);
}

TEST_CASE("renormalization: constant sequence and d = 1") {
  const PrecisionContext ctx{.bits = 192};
  const std::vector<Q> ones(6, 1);
  const BigReal zero(0, 192);
  const BigReal delta(Q(1, 10), 192);
  // alpha = 1, A = 0: J(delta X - 1) = (delta X)^d
  const auto J = renormalize_jensen(ratio_fn(ones), 5, zero, delta, ctx);
  const auto K = renormalize_reciprocal(ratio_fn(ones), 5, zero, delta, ctx);
  CHECK(J == to_real(P({0, 0, 0, 0, 0, 1}), 192));
  CHECK(K == to_real(P({0, 0, 0, 0, 0, 1}), 192));
  // d = 1: e^{-A} r_1 X + (1 - e^{-A} r_1)/delta
  const auto id = SequenceId::partition();
  const HJData data = data_partition(5000, DataVariant::Exact, ctx);
  const auto R1 = renormalize_jensen(id, 1, 5000, data, ctx);
  const BigReal lead = exp(-data.A.rounded(256)) * BigReal(*exact_ratio(id, 5000, 1), 256);
  CHECK(abs(R1.coeff(1) - lead) < two_pow(-120));
  CHECK(abs(R1.coeff(1) - 1) < 0.001);
  CHECK(abs(R1.coeff(0) - (BigReal(1, 256) - lead) / data.delta) < two_pow(-100));
  CHECK(abs(R1.coeff(0)) < 0.01);
  CHECK_THROWS_AS(renormalize_jensen(id, 0, 5000, data, ctx), DomainError);
}

TEST_CASE("renormalization is stable under precision doubling") {
  for (const auto& id : {SequenceId::partition(), SequenceId::kregular(2), SequenceId::gamma(Q(1, 2)),
                         SequenceId::power_exp(1, Q(1, 2), 3)}) {
    for (long d : {2, 5, 8}) {
      const PrecisionContext lo{.bits = 192};
      const PrecisionContext hi{.bits = 384};
      const HJData data = data_for(id, 20000, DataVariant::Exact, lo);
      const auto a = renormalize_jensen(id, d, 20000, data, lo);
      const auto b = renormalize_jensen(id, d, 20000, data, hi);
      CAPTURE(id.name());
      CHECK(sup_distance(a, b) < two_pow(-32));
    }
  }
}

TEST_CASE("renormalization reports an unstable ratio provider") {
  const PrecisionContext ctx{.bits = 128};
  // the value depends on the precision it is asked for, so it never settles
  RatioFn noisy = [](long j, long prec) { return BigReal(1, prec) + BigReal(j * prec, prec); };
  try {
    renormalize_jensen(noisy, 3, BigReal(0, 128), BigReal(Q(1, 100), 128), ctx);
    FAIL("expected a precision error");
  } catch (const PrecisionError& e) {
    CHECK(e.suggested_bits() > 128);
  }
}

TEST_CASE("reciprocal Gamma approaches X^2 - 2") {
  const PrecisionContext ctx{.bits = 192};
  const auto id = SequenceId::reciprocal_of(SequenceId::gamma(0));
  const HJData data = data_for(id, 100000, DataVariant::Simplified, ctx);
  CHECK(data.kappa == -1);
  const auto R = renormalize_jensen(id, 2, 100000, data, ctx);
  CHECK(sup_distance(R, to_real(P({-2, 0, 1}), 192)) < 0.01);
}

TEST_CASE("Newton: all-real Jensen polynomials imply log-concavity") {
  const auto id = SequenceId::partition();
  for (long d = 2; d <= 5; ++d) {
    for (long n = 0; n <= 400; n += 3) {
      if (count_real_roots(jensen_poly(id, d, n)) != d) continue;
      const ExactInteger a = partition_count(n), b = partition_count(n + 1), c = partition_count(n + 2);
      REQUIRE(b * b >= a * c);
    }
  }
}
