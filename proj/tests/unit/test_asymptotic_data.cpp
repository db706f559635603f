#include <doctest.h>

#include "jensen/asymptotic_data.hpp"
#include "jensen/errors.hpp"
#include "jensen/poly_core.hpp"

using namespace jensen;

namespace {

using Q = ExactRational;
const PrecisionContext kCtx{.bits = 192};

BigReal R(const char* s) { return BigReal::parse(s, 256); }

// |x - ref| <= tol * |ref|
bool rel(const BigReal& x, const char* ref, const char* tol = "1e-35") {
  return relative_difference(x, R(ref)) <= R(tol);
}

}  // namespace

// Reference values below come from an mpmath evaluation of the closed forms
// at 40 digits (Bessel and digamma evaluated by mpmath itself).

TEST_CASE("partition data") {
  const HJData s = data_partition(100, DataVariant::Simplified, kCtx);
  CHECK(s.kappa == -1);
  CHECK(rel(s.A, "0.128254983016186409554403635967100641146726067"));
  CHECK(rel(s.delta, "0.0179063524353919166315921864427335850455783917"));
  const HJData e = data_partition(1000000, DataVariant::Exact, kCtx);
  const HJData es = data_partition(1000000, DataVariant::Simplified, kCtx);
  CHECK(rel(abs(e.A - es.A) / e.delta, "0.05587729283575660251677051473817805459511", "1e-30"));
  CHECK(rel(abs(es.delta / e.delta - 1), "0.0007803499946776186307478363003190241498452", "1e-28"));
  CHECK_THROWS_AS(data_partition(0, DataVariant::Exact, kCtx), DomainError);
}

TEST_CASE("overpartition data") {
  const HJData s = data_overpartition(4, DataVariant::Simplified, kCtx);
  CHECK(abs(s.A - pi(256) / 4) < R("1e-50"));
  const HJData t = data_overpartition(10000, DataVariant::Simplified, kCtx);
  CHECK(abs(t.delta - sqrt(pi(256)) / (sqrt(BigReal(8, 256)) * 1000)) < R("1e-50"));
  for (long n : {1, 2, 10, 1000}) {
    CHECK(data_overpartition(n, DataVariant::Exact, kCtx).kappa == -1);
    CHECK(data_overpartition(n, DataVariant::Simplified, kCtx).kappa == -1);
  }
  const HJData e = data_overpartition(1000000, DataVariant::Exact, kCtx);
  CHECK(rel(abs(e.A - data_overpartition(1000000, DataVariant::Simplified, kCtx).A) / e.delta,
            "0.05048675992853422040077290892556418058196", "1e-30"));
}

TEST_CASE("k-regular data") {
  const HJData s = data_kregular(2, 10000, DataVariant::Simplified, kCtx);
  CHECK(abs(s.A - pi(256) / (sqrt(BigReal(12, 256)) * 100)) < R("1e-50"));
  const HJData e = data_kregular(2, 10000, DataVariant::Exact, kCtx);
  CHECK(rel(e.A, "0.008994082187597717001655241389303097631674"));
  CHECK(rel(e.delta, "0.0004722090058982715545497011085073650173002", "1e-33"));
  // the coefficient gap at n = 10^4 is about 0.159
  CHECK(rel(abs(e.A - s.A) / e.delta, "0.1586471935893386660525613638874118673152", "1e-30"));
  const HJData e3 = data_kregular(3, 500, DataVariant::Exact, kCtx);
  CHECK(rel(e3.A, "0.04533662720178636703419833589279844739828"));
  CHECK(rel(e3.delta, "0.004682206370155019727941570028879223159688", "1e-33"));
  // k -> infinity approaches the partition simplified data
  const HJData big = data_kregular(1000000000, 500, DataVariant::Simplified, kCtx);
  const HJData part = data_partition(500, DataVariant::Simplified, kCtx);
  CHECK(relative_difference(big.A, part.A) < R("1e-9"));
  CHECK(relative_difference(big.delta, part.delta) < R("1e-9"));
  CHECK_THROWS_AS(data_kregular(1, 100, DataVariant::Exact, kCtx), DomainError);
}

TEST_CASE("Gamma data") {
  const HJData s = data_gamma(1000000, 0, DataVariant::Simplified, kCtx);
  CHECK(s.kappa == 1);
  CHECK(abs(s.A - log(BigReal(1000000, 256))) < R("1e-50"));
  CHECK(abs(s.delta - BigReal(1, 256) / sqrt(BigReal(2000000, 256))) < R("1e-50"));
  const HJData e = data_gamma(10000, 0, DataVariant::Exact, kCtx);
  CHECK(rel(e.A, "9.210290371142849403571965814769202903817"));
  CHECK(rel(e.delta, "0.007071244592243527617931912866043260234837"));
  CHECK(abs(e.A - (log(BigReal(10000, 256)) - BigReal(Q(1, 20000), 256))) < R("1e-8"));
  const HJData h = data_gamma(50, Q(1, 2), DataVariant::Exact, kCtx);
  CHECK(rel(h.A, "3.912039670928391984608787225352981656654"));
  CHECK(rel(h.delta, "0.09999833355270766654690258556017259906017"));
  // reciprocal: {-A, -kappa, delta}
  const auto rid = SequenceId::reciprocal_of(SequenceId::gamma(0));
  const HJData r = data_for(rid, 10000, DataVariant::Exact, kCtx);
  CHECK(r.kappa == -1);
  CHECK(r.A == -e.A);
  CHECK(r.delta == e.delta);
  CHECK_THROWS_AS(data_gamma(2, -3, DataVariant::Exact, kCtx), DomainError);
}

TEST_CASE("power-exp and n^-n data") {
  const HJData d = data_powerexp(0, Q(1, 2), 1, 10000, kCtx);
  CHECK(d.kappa == -1);
  CHECK(abs(d.A - BigReal(Q(1, 200), 256)) < R("1e-50"));
  // delta^2 = 1/(8 n^{3/2}) = 1/8 * 10^-6
  CHECK(abs(d.delta * d.delta - BigReal(Q(1, 8000000), 256)) < R("1e-50"));
  CHECK(data_powerexp(0, Q(3, 2), 1, 100, kCtx).kappa == 1);
  CHECK(data_powerexp(0, Q(1, 2), -1, 100, kCtx).kappa == 1);
  CHECK_THROWS_AS(data_powerexp(0, 1, 1, 100, kCtx), DomainError);
  CHECK_THROWS_AS(data_powerexp(0, 2, 1, 100, kCtx), DomainError);
  CHECK_THROWS_AS(data_powerexp(0, Q(1, 2), 0, 100, kCtx), DomainError);
  CHECK_FALSE(has_simplified_variant(SequenceId::power_exp(0, Q(1, 2), 1)));
  const HJData ns = data_neg_self_power(50, kCtx);
  CHECK(ns.kappa == -1);
  CHECK(abs(ns.A - (-1 - log(BigReal(50, 256)))) < R("1e-50"));
  CHECK(abs(ns.delta - BigReal(1, 256) / 10) < R("1e-50"));
}

TEST_CASE("kappa and delta across families") {
  const std::vector<std::pair<SequenceId, int>> cases{
      {SequenceId::partition(), -1},
      {SequenceId::overpartition(), -1},
      {SequenceId::kregular(2), -1},
      {SequenceId::kregular(5), -1},
      {SequenceId::gamma(Q(1, 3)), 1},
      {SequenceId::reciprocal_of(SequenceId::gamma(0)), -1},
      {SequenceId::power_exp(1, Q(1, 2), 2), -1},
      {SequenceId::neg_self_power(), -1}};
  for (const auto& [id, kappa] : cases) {
    for (DataVariant v : {DataVariant::Exact, DataVariant::Simplified}) {
      if (v == DataVariant::Simplified && !has_simplified_variant(id)) continue;
      for (long n : {100L, 4000L, 250000L}) {
        const HJData a = data_for(id, n, v, kCtx);
        const HJData b = data_for(id, 4 * n, v, kCtx);
        CAPTURE(id.name());
        CHECK(a.kappa == kappa);
        CHECK(a.delta.sign() > 0);
        CHECK(b.delta < a.delta);
      }
    }
  }
}

TEST_CASE("rho") {
  CHECK(abs(rho(1, BigReal(3, 192), kCtx) - R("0.75")) < R("1e-50"));
  CHECK(abs(rho(3, BigReal(3, 192), kCtx) - R("0.0625")) < R("1e-50"));
  for (double x : {1.5, 3.0, 10.0, 57.5}) {
    const BigReal xr(x, 256);
    const BigReal ref = (-(xr * xr * xr) / ((xr - 1) * (xr - 1)) + 6) / 8;
    CHECK(abs(rho(2, xr, kCtx) - ref) < R("1e-50"));
  }
  // Taylor coefficients of F(x^2 (1 + l)), F(z) = -log z + log(1 - z^{-1/2}) + sqrt z
  CHECK(rel(rho(3, BigReal(10, 192), kCtx), "0.3287608596250571559213534522176497485139"));
  CHECK(rel(rho(4, BigReal(10, 192), kCtx), "-0.1739349946654473403444596860234720317025"));
  CHECK(rel(rho(3, BigReal(57.5, 192), kCtx), "3.266006607135967894220215764996854707347"));
  CHECK(rel(rho(4, BigReal(57.5, 192), kCtx), "-2.001004845759010782149365790716477772369"));
  CHECK(rel(rho(1, BigReal(57.5, 192), kCtx), "27.75884955752212389380530973451327433628"));
  CHECK_THROWS_AS(rho(2, BigReal(1, 192), kCtx), DomainError);
}

TEST_CASE("exact and simplified data share kappa and delta ratio tends to 1") {
  for (const auto& id : {SequenceId::partition(), SequenceId::overpartition(), SequenceId::kregular(2),
                         SequenceId::kregular(3), SequenceId::gamma(0)}) {
    BigReal last(1, 192);
    for (long n : {1000L, 10000L, 100000L, 1000000L}) {
      const HJData e = data_for(id, n, DataVariant::Exact, kCtx);
      const HJData s = data_for(id, n, DataVariant::Simplified, kCtx);
      CHECK(e.kappa == s.kappa);
      const BigReal gap = abs(s.delta / e.delta - 1);
      CHECK(gap < last);
      last = gap;
    }
    CHECK(last < R("0.001"));
  }
}

TEST_CASE("sign of the second difference of log alpha") {
  const PrecisionContext ctx{.bits = 192};
  for (const auto& id : {SequenceId::partition(), SequenceId::overpartition(), SequenceId::kregular(3),
                         SequenceId::reciprocal_of(SequenceId::gamma(0)), SequenceId::gamma(Q(1, 2))}) {
    const int expected = id.family == Family::Gamma && !id.reciprocal ? 1 : -1;
    for (long n : {200L, 3000L, 20000L}) {
      const BigReal d2 = log_ratio(id, n + 1, 1, ctx) - log_ratio(id, n, 1, ctx);
      CAPTURE(id.name());
      CHECK(d2.sign() == expected);
    }
  }
}
