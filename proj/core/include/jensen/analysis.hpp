#pragma once

// Verification engine: distance to Hermite limits, exact real-root analysis
// by Sturm chains, log-concavity and hyperbolicity scans, the kcc error fit
// and the Laguerre limit checks.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jensen/asymptotic_data.hpp"
#include "jensen/poly_core.hpp"

namespace jensen {

// Parallel grid evaluation: fn(i) for i in [0, count) on up to `workers`
// threads.  Results come back in index order whatever the worker count.
template <typename T, typename Fn>
std::vector<T> parallel_map(long count, int workers, Fn&& fn);

// ------------------------------------------------------------- convergence

struct HermiteDeviation {
  RealPolynomial jensen;      // renormalized J
  RealPolynomial reciprocal;  // renormalized K
  RationalPolynomial target;
  BigReal jensen_deviation;
  BigReal reciprocal_deviation;
};

// Target chosen by data.kappa: H_d(X/2) for -1, i^{-d} H_d(iX/2) for +1.
HermiteDeviation hermite_deviation(const SequenceId& id, long d, long n, const HJData& data,
                                   const PrecisionContext& ctx);

struct ConvergenceReport {
  std::string subject;    // family name, or the Laguerre form
  std::string parameter;  // "n" or "r"
  long d = 0;
  std::string variant;    // "exact", "simple", or empty
  std::vector<long> grid;
  std::vector<std::vector<BigReal>> deviations;  // [grid index][coefficient]
  std::vector<BigReal> sup_deviation;
  // Same for the reciprocal line when it applies.
  std::vector<BigReal> reciprocal_sup_deviation;

  bool strictly_decreasing() const;
};

ConvergenceReport convergence_report(const SequenceId& id, long d, const std::vector<long>& grid,
                                     DataVariant variant, const PrecisionContext& ctx,
                                     int workers = 1);

// -------------------------------------------------------------------- roots

enum class RootVerdict { AllRealDistinct, NoneReal, OneRealRestImaginary, Mixed };
std::string to_string(RootVerdict v);

struct RootInterval {
  ExactRational lo;  // root lies in (lo, hi]
  ExactRational hi;
};

struct RootReport {
  std::string subject;  // e.g. "partition d=3 n=200 J"
  long degree = 0;
  long real_root_count = 0;  // distinct real roots
  long distinct_roots = 0;   // distinct complex roots
  bool squarefree = false;
  std::vector<RootInterval> intervals;
  std::optional<RootVerdict> verdict;
};

// Distinct real roots by the Sturm chain of P.  No isolation.
long count_real_roots(const RationalPolynomial& p);
// Full report with isolating intervals of width <= 2^-16.
RootReport sturm_real_roots(const RationalPolynomial& p);
RootVerdict verdict_for(const RootReport& report);

struct RootClassification {
  RootReport jensen;
  RootReport reciprocal;
};
// Exact for every family with rational ratios (Gamma scaled by Gamma(n+beta)).
RootClassification classify_roots(const SequenceId& id, long d, long n);

// --------------------------------------------------------------- thresholds

struct ThresholdReport {
  std::string subject;
  std::string property;  // "log-concave" or "hyperbolic(d=…)"
  long first_index = 0;
  long n_max = 0;        // last n scanned
  long n0 = 0;           // property holds on [n0, n_max]
  std::vector<long> failures;
  // Log-concavity only: the strict inequality.
  std::optional<long> n0_strict;
  std::vector<long> failures_strict;
};

// alpha(n+1)^2 >= alpha(n) alpha(n+2) for first_index <= n <= N_max - 2.
ThresholdReport log_concavity_scan(const SequenceId& id, long n_max, int workers = 1);
// J^{d,n} has d distinct real roots, first_index <= n <= N_max.
ThresholdReport hyperbolicity_threshold(const SequenceId& id, long d, long n_max, int workers = 1);

// ---------------------------------------------------------------------- kcc

struct KccReport {
  std::string subject;
  long m = 0;
  std::vector<long> grid;
  // errors[j-1][i] for j = 1..m+1
  std::vector<std::vector<BigReal>> errors;
  std::vector<double> slopes;  // per j
};

// |log(alpha(n+j)/alpha(n)) - sum_{r<=m} rho_r(x) j^r / n'^r| with
// partition: x = sqrt(2 pi^2/3 n'), n' = n - 1/24; overpartition: x = pi sqrt(n), n' = n.
BigReal kcc_error(const SequenceId& id, long m, long n, long j, const PrecisionContext& ctx);
KccReport kcc_error_fit(const SequenceId& id, long m, const std::vector<long>& grid,
                        const PrecisionContext& ctx, int workers = 1);
// Ordinary least squares slope of y against x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

// ----------------------------------------------------------------- Laguerre

enum class LaguerreForm { WA, WB, Lagher, Laghera };
std::string to_string(LaguerreForm form);

// Renormalized Laguerre polynomial of the given form at parameter r, and its
// target H_d(-X)/d! (WA, Lagher) or H_d(X)/d! (WB, Laghera).
RealPolynomial laguerre_renormalized(LaguerreForm form, long d, const ExactRational& r,
                                     const PrecisionContext& ctx);
RationalPolynomial laguerre_target(LaguerreForm form, long d);

ConvergenceReport laguerre_limit_check(LaguerreForm form, long d, const std::vector<long>& r_grid,
                                       const PrecisionContext& ctx, int workers = 1);

// L_d^{(r-1)} == L_d^{(r)} - L_{d-1}^{(r)}, exactly.
bool laguerre_shift_identity(long d, const ExactRational& r);

struct JarRow {
  long d = 0;
  long r = 0;
  BigReal jar_deviation;     // difference form with Gamma(r)/Gamma(r+d)
  BigReal jar2_deviation;    // same with r^{-d}
  BigReal jar3_deviation;    // (2/r)^{d/2} L_d^{(r)}(r + sqrt(2r) X) against H_d(-X)/d!
  BigReal jar_gap;           // |jar - jar2| in sup norm
  BigReal wa_residual;       // |jar - wa| in sup norm
  bool gamma_bound = false;  // |r^d Gamma(r)/Gamma(r+d) - 1| < 2 d^2 / r
};

struct JarReport {
  long d_max = 0;
  std::vector<long> r_grid;
  std::vector<JarRow> rows;
  bool identities_hold = false;  // exact shift identity for every d, r
  bool passed = false;
};

JarReport jar_equivalence_check(long d_max, const std::vector<long>& r_grid,
                                const PrecisionContext& ctx);

// ---------------------------------------------------------- data coherence

struct CoherenceReport {
  std::string subject;
  std::vector<long> grid;
  std::vector<BigReal> a_gap;      // |A - A*| / delta
  std::vector<BigReal> delta_gap;  // |delta* / delta - 1|
  std::vector<int> kappa_exact;
  std::vector<int> kappa_simple;
};

CoherenceReport data_coherence(const SequenceId& id, const std::vector<long>& grid,
                               const PrecisionContext& ctx);

}  // namespace jensen

#include "jensen/detail/parallel.hpp"
