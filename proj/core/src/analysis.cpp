#include "jensen/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "jensen/errors.hpp"

namespace jensen {

namespace {

std::string variant_name(DataVariant v) { return v == DataVariant::Exact ? "exact" : "simple"; }

std::vector<BigReal> coefficient_gaps(const RealPolynomial& p, const RealPolynomial& q, long d) {
  std::vector<BigReal> out;
  for (long k = 0; k <= d; ++k) out.push_back(abs(p.coeff(k) - q.coeff(k)));
  return out;
}

BigReal max_of(const std::vector<BigReal>& v, long prec) {
  BigReal best(prec);
  for (const auto& x : v) best = max(best, x);
  return best;
}

bool strictly_decreasing(const std::vector<BigReal>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

}  // namespace

// ------------------------------------------------------------- convergence

HermiteDeviation hermite_deviation(const SequenceId& id, long d, long n, const HJData& data,
                                   const PrecisionContext& ctx) {
  RationalPolynomial target = hermite_target(d, variant_for_kappa(data.kappa));
  RealPolynomial j = renormalize_jensen(id, d, n, data, ctx);
  RealPolynomial k = renormalize_reciprocal(id, d, n, data, ctx);
  const RealPolynomial t = to_real(target, ctx.bits);
  BigReal dj = sup_distance(j, t);
  BigReal dk = sup_distance(k, t);
  return HermiteDeviation{std::move(j), std::move(k), std::move(target), std::move(dj),
                          std::move(dk)};
}

bool ConvergenceReport::strictly_decreasing() const {
  return jensen::strictly_decreasing(sup_deviation);
}

ConvergenceReport convergence_report(const SequenceId& id, long d, const std::vector<long>& grid,
                                     DataVariant variant, const PrecisionContext& ctx,
                                     int workers) {
  if (d < 1) throw DomainError("convergence requires d >= 1");
  ConvergenceReport report;
  report.subject = id.name();
  report.parameter = "n";
  report.d = d;
  report.variant = has_simplified_variant(id) ? variant_name(variant) : "exact";
  report.grid = grid;
  if (id.is_integer_family() && !grid.empty()) {
    integer_term(id, *std::max_element(grid.begin(), grid.end()) + d);  // fill the cache once
  }
  auto rows = parallel_map<HermiteDeviation>(static_cast<long>(grid.size()), workers, [&](long i) {
    const long n = grid[static_cast<std::size_t>(i)];
    return hermite_deviation(id, d, n, data_for(id, n, variant, ctx), ctx);
  });
  for (const auto& row : rows) {
    report.deviations.push_back(coefficient_gaps(row.jensen, to_real(row.target, ctx.bits), d));
    report.sup_deviation.push_back(row.jensen_deviation);
    report.reciprocal_sup_deviation.push_back(row.reciprocal_deviation);
  }
  return report;
}

// -------------------------------------------------------------------- roots

std::string to_string(RootVerdict v) {
  switch (v) {
    case RootVerdict::AllRealDistinct:
      return "AllRealDistinct";
    case RootVerdict::NoneReal:
      return "NoneReal";
    case RootVerdict::OneRealRestImaginary:
      return "OneRealRestImaginary";
    case RootVerdict::Mixed:
      return "Mixed";
  }
  return "Mixed";
}

namespace {

// Scale by 1/|leading|; signs, and hence sign variations, are unchanged.
RationalPolynomial positive_normalized(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  RationalPolynomial out = p;
  out *= ExactRational(1) / abs(p.leading());
  return out;
}

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{positive_normalized(p)};
  RationalPolynomial next = positive_normalized(p.derivative());
  while (!next.is_zero()) {
    chain.push_back(next);
    const RationalPolynomial& a = chain[chain.size() - 2];
    const RationalPolynomial& b = chain.back();
    RationalPolynomial r = divmod(a, b).second;
    r *= ExactRational(-1);
    next = positive_normalized(r);
  }
  return chain;
}

long variations(const std::vector<int>& signs) {
  long count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

long variations_at(const std::vector<RationalPolynomial>& chain, const ExactRational& x) {
  std::vector<int> signs;
  for (const auto& p : chain) signs.push_back(sgn(p.evaluate(x)));
  return variations(signs);
}

long variations_at_infinity(const std::vector<RationalPolynomial>& chain, bool positive) {
  std::vector<int> signs;
  for (const auto& p : chain) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

// Power of two strictly above every |root| (Cauchy bound).
ExactRational root_bound(const RationalPolynomial& p) {
  ExactRational m = 0;
  for (long i = 0; i < p.degree(); ++i) m = std::max(m, ExactRational(abs(p.coeff(i) / p.leading())));
  ExactRational bound = 1;
  while (bound <= m + 1) bound *= 2;
  return bound;
}

}  // namespace

long count_real_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("root analysis of the zero polynomial");
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

RootReport sturm_real_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("root analysis of the zero polynomial");
  RootReport report;
  report.degree = p.degree();
  if (p.degree() == 0) {
    report.squarefree = true;
    return report;
  }
  const RationalPolynomial g = gcd(p, p.derivative());
  report.squarefree = g.degree() == 0;
  const RationalPolynomial q = report.squarefree ? p : divmod(p, g).first;
  report.distinct_roots = q.degree();
  const auto chain = sturm_chain(q);
  report.real_root_count = variations_at_infinity(chain, false) - variations_at_infinity(chain, true);

  const ExactRational max_width(1, 1L << 16);
  const ExactRational bound = root_bound(q);
  struct Pending {
    ExactRational lo, hi;
    long vlo, vhi;
  };
  std::vector<Pending> stack{{-bound, bound, variations_at(chain, -bound), variations_at(chain, bound)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    const long count = cur.vlo - cur.vhi;  // roots in (lo, hi]
    if (count == 0) continue;
    if (count == 1 && cur.hi - cur.lo <= max_width) {
      report.intervals.push_back({cur.lo, cur.hi});
      continue;
    }
    ExactRational mid = (cur.lo + cur.hi) / 2;
    mid.canonicalize();
    const long vmid = variations_at(chain, mid);
    stack.push_back({mid, cur.hi, vmid, cur.vhi});
    stack.push_back({cur.lo, mid, cur.vlo, vmid});
  }
  std::sort(report.intervals.begin(), report.intervals.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  report.verdict = verdict_for(report);
  return report;
}

RootVerdict verdict_for(const RootReport& r) {
  if (!r.squarefree) return RootVerdict::Mixed;
  if (r.real_root_count == r.degree) return RootVerdict::AllRealDistinct;
  if (r.real_root_count == 0) return RootVerdict::NoneReal;
  if (r.real_root_count == 1) return RootVerdict::OneRealRestImaginary;
  return RootVerdict::Mixed;
}

namespace {

RationalPolynomial exact_jensen(const SequenceId& id, long d, long n) {
  if (id.has_rational_terms()) return jensen_poly(id, d, n);
  return scaled_jensen_poly(id, d, n);
}

std::string poly_subject(const SequenceId& id, long d, long n, const char* which) {
  return id.name() + " d=" + std::to_string(d) + " n=" + std::to_string(n) + " " + which;
}

}  // namespace

RootClassification classify_roots(const SequenceId& id, long d, long n) {
  if (d < 1) throw DomainError("root classification requires d >= 1");
  const RationalPolynomial j = exact_jensen(id, d, n);
  RootClassification out{sturm_real_roots(j), sturm_real_roots(j.reversed(d))};
  out.jensen.subject = poly_subject(id, d, n, "J");
  out.reciprocal.subject = poly_subject(id, d, n, "K");
  return out;
}

// --------------------------------------------------------------- thresholds

ThresholdReport log_concavity_scan(const SequenceId& id, long n_max, int workers) {
  id.validate();
  if (!id.has_rational_terms()) {
    throw UnsupportedError("log-concavity scans need exact terms; " + id.name() + " has none");
  }
  ThresholdReport report;
  report.subject = id.name();
  report.property = "log-concave";
  report.first_index = id.first_index();
  report.n_max = n_max;
  const long lo = report.first_index;
  if (n_max - 2 < lo) throw DomainError("N_max too small for a log-concavity scan");
  std::vector<ExactRational> terms;
  for (long n = lo; n <= n_max; ++n) terms.push_back(rational_term(id, n));
  struct Cmp {
    int sign;  // sign of alpha(n+1)^2 - alpha(n) alpha(n+2)
  };
  const long count = n_max - 2 - lo + 1;
  auto signs = parallel_map<Cmp>(count, workers, [&](long i) {
    const auto& a0 = terms[static_cast<std::size_t>(i)];
    const auto& a1 = terms[static_cast<std::size_t>(i + 1)];
    const auto& a2 = terms[static_cast<std::size_t>(i + 2)];
    return Cmp{sgn(ExactRational(a1 * a1 - a0 * a2))};
  });
  for (long i = 0; i < count; ++i) {
    const int s = signs[static_cast<std::size_t>(i)].sign;
    if (s < 0) report.failures.push_back(lo + i);
    if (s <= 0) report.failures_strict.push_back(lo + i);
  }
  report.n_max = n_max - 2;
  report.n0 = report.failures.empty() ? lo : report.failures.back() + 1;
  report.n0_strict = report.failures_strict.empty() ? lo : report.failures_strict.back() + 1;
  return report;
}

ThresholdReport hyperbolicity_threshold(const SequenceId& id, long d, long n_max, int workers) {
  id.validate();
  if (d < 2) throw DomainError("hyperbolicity scans require d >= 2");
  if (!id.has_rational_ratios()) {
    throw UnsupportedError("hyperbolicity scans need exact coefficients; " + id.name() + " has none");
  }
  ThresholdReport report;
  report.subject = id.name();
  report.property = "hyperbolic(d=" + std::to_string(d) + ")";
  report.first_index = id.first_index();
  report.n_max = n_max;
  const long lo = report.first_index;
  if (n_max < lo) throw DomainError("N_max below the first index");
  if (id.is_integer_family()) integer_term(id, n_max + d);
  const long count = n_max - lo + 1;
  auto ok = parallel_map<char>(count, workers, [&](long i) -> char {
    return count_real_roots(exact_jensen(id, d, lo + i)) == d ? 1 : 0;
  });
  for (long i = 0; i < count; ++i) {
    if (!ok[static_cast<std::size_t>(i)]) report.failures.push_back(lo + i);
  }
  report.n0 = report.failures.empty() ? lo : report.failures.back() + 1;
  return report;
}

// ---------------------------------------------------------------------- kcc

BigReal kcc_error(const SequenceId& id, long m, long n, long j, const PrecisionContext& ctx) {
  if (id.reciprocal || (id.family != Family::Partition && id.family != Family::Overpartition)) {
    throw UnsupportedError("the kcc expansion exists for partitions and overpartitions only");
  }
  if (m < 1) throw DomainError("kcc requires m >= 1");
  if (n < 1 || j < 0) throw DomainError("kcc requires n >= 1 and j >= 0");
  const long wp = ctx.working_bits() + 32;
  const PrecisionContext inner = ctx.with_bits(wp);
  if (j == 0) return BigReal(ctx.bits);
  const BigReal p = pi(wp);
  BigReal nprime(wp);
  BigReal x(wp);
  if (id.family == Family::Partition) {
    nprime = BigReal(ExactRational(24 * n - 1, 24), wp);
    x = sqrt(p * p * BigReal(ExactRational(2, 3), wp) * nprime);
  } else {
    nprime = BigReal(n, wp);
    x = p * sqrt(nprime);
  }
  BigReal predicted(wp);
  const BigReal lambda = BigReal(j, wp) / nprime;
  BigReal power = lambda;
  for (long r = 1; r <= m; ++r) {
    predicted += rho(r, x, inner) * power;
    power *= lambda;
  }
  return abs(log_ratio(id, n, j, inner) - predicted).rounded(ctx.bits);
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("ols_slope needs >= 2 points");
  const double nn = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / nn, my = sy / nn;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

KccReport kcc_error_fit(const SequenceId& id, long m, const std::vector<long>& grid,
                        const PrecisionContext& ctx, int workers) {
  if (grid.size() < 3) throw DomainError("kcc fit needs at least 3 grid points");
  KccReport report;
  report.subject = id.name();
  report.m = m;
  report.grid = grid;
  integer_term(id, *std::max_element(grid.begin(), grid.end()) + m + 1);
  auto columns = parallel_map<std::vector<BigReal>>(
      static_cast<long>(grid.size()), workers, [&](long i) {
        std::vector<BigReal> col;
        for (long j = 1; j <= m + 1; ++j) {
          col.push_back(kcc_error(id, m, grid[static_cast<std::size_t>(i)], j, ctx));
        }
        return col;
      });
  std::vector<double> lx;
  for (long n : grid) lx.push_back(std::log(static_cast<double>(n)));
  for (long j = 1; j <= m + 1; ++j) {
    std::vector<BigReal> row;
    std::vector<double> ly;
    for (const auto& col : columns) {
      row.push_back(col[static_cast<std::size_t>(j - 1)]);
      ly.push_back(log(row.back()).to_double());
    }
    report.errors.push_back(std::move(row));
    report.slopes.push_back(ols_slope(lx, ly));
  }
  return report;
}

// ----------------------------------------------------------------- Laguerre

std::string to_string(LaguerreForm form) {
  switch (form) {
    case LaguerreForm::WA:
      return "wa";
    case LaguerreForm::WB:
      return "wb";
    case LaguerreForm::Lagher:
      return "lagher";
    case LaguerreForm::Laghera:
      return "laghera";
  }
  return "wa";
}

RationalPolynomial laguerre_target(LaguerreForm form, long d) {
  const RationalPolynomial h = hermite_physicists(d);
  const bool negate = form == LaguerreForm::WA || form == LaguerreForm::Lagher;
  std::vector<ExactRational> c(h.coeffs().begin(), h.coeffs().end());
  const ExactRational inv_fact(1, factorial(d));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] *= inv_fact;
    if (negate && i % 2 == 1) c[i] = -c[i];
  }
  return RationalPolynomial(std::move(c));
}

namespace {

long laguerre_bits(long d, const ExactRational& r, const PrecisionContext& ctx) {
  const double lr = std::log2(std::max(2.0, r.get_d() + 2.0));
  return ctx.working_bits() + static_cast<long>(std::ceil(static_cast<double>(d) * lr)) + 32;
}

// L_d^{(s)}(r + sqrt(2r) X), coefficients at wp bits.
RealPolynomial laguerre_at_center(long d, const ExactRational& s, const ExactRational& r, long wp) {
  const BigReal rr(r, wp);
  return compose_affine(to_real(laguerre(d, s), wp), rr, sqrt(rr * 2L));
}

// L*_d^{(s)}(1/r + sqrt(2) X / r^{3/2}).
RealPolynomial laguerre_reciprocal_at_center(long d, const ExactRational& s, const ExactRational& r,
                                             long wp) {
  const BigReal rr(r, wp);
  const BigReal scale = sqrt(BigReal(2L, wp)) / (rr * sqrt(rr));
  return compose_affine(to_real(laguerre_reciprocal(d, s), wp), BigReal(1L, wp) / rr, scale);
}

// Gamma(r)/Gamma(r+d) = 1 / prod_{i<d} (r+i).
ExactRational gamma_ratio(const ExactRational& r, long d) {
  ExactRational prod = 1;
  for (long i = 0; i < d; ++i) prod *= r + i;
  return 1 / prod;
}

RealPolynomial rounded(const RealPolynomial& p, long d, long bits) {
  std::vector<BigReal> c;
  for (long k = 0; k <= d; ++k) c.push_back(p.coeff(k).rounded(bits));
  return RealPolynomial(std::move(c));
}

}  // namespace

RealPolynomial laguerre_renormalized(LaguerreForm form, long d, const ExactRational& r,
                                     const PrecisionContext& ctx) {
  ctx.validate();
  if (d < 0) throw DomainError("degree must be >= 0");
  if (r <= 0) throw DomainError("Laguerre limits require r > 0");
  const long wp = laguerre_bits(d, r, ctx);
  const BigReal rr(r, wp);
  const BigReal half_d(ExactRational(d, 2), wp);
  RealPolynomial p;
  BigReal factor(wp);
  switch (form) {
    case LaguerreForm::WA:
      p = laguerre_at_center(d, r - 1, r, wp);
      factor = pow(rr * 2L, half_d) * BigReal(gamma_ratio(r, d), wp);
      break;
    case LaguerreForm::WB:
      p = laguerre_reciprocal_at_center(d, r - 1, r, wp);
      factor = pow(rr * rr * rr * 2L, half_d) * BigReal(gamma_ratio(r, d), wp);
      break;
    case LaguerreForm::Lagher:
      p = laguerre_at_center(d, r, r, wp);
      factor = pow(BigReal(2L, wp) / rr, half_d);
      break;
    case LaguerreForm::Laghera:
      p = laguerre_reciprocal_at_center(d, r, r, wp);
      factor = pow(rr * 2L, half_d);
      break;
  }
  p *= factor;
  return rounded(p, d, ctx.bits);
}

ConvergenceReport laguerre_limit_check(LaguerreForm form, long d, const std::vector<long>& r_grid,
                                       const PrecisionContext& ctx, int workers) {
  ConvergenceReport report;
  report.subject = to_string(form);
  report.parameter = "r";
  report.d = d;
  report.grid = r_grid;
  const RealPolynomial target = to_real(laguerre_target(form, d), ctx.bits);
  auto polys = parallel_map<RealPolynomial>(static_cast<long>(r_grid.size()), workers, [&](long i) {
    return laguerre_renormalized(form, d, ExactRational(r_grid[static_cast<std::size_t>(i)]), ctx);
  });
  for (const auto& p : polys) {
    report.deviations.push_back(coefficient_gaps(p, target, d));
    report.sup_deviation.push_back(max_of(report.deviations.back(), ctx.bits));
  }
  return report;
}

bool laguerre_shift_identity(long d, const ExactRational& r) {
  if (d < 1) throw DomainError("the shift identity needs d >= 1");
  return laguerre(d, r - 1) == laguerre(d, r) - laguerre(d - 1, r);
}

JarReport jar_equivalence_check(long d_max, const std::vector<long>& r_grid,
                                const PrecisionContext& ctx) {
  if (d_max < 1) throw DomainError("jar check requires d_max >= 1");
  JarReport report;
  report.d_max = d_max;
  report.r_grid = r_grid;
  report.identities_hold = true;
  bool residuals_ok = true;
  bool bounds_ok = true;
  bool decreasing_ok = true;
  const BigReal tol = pow(BigReal(2L, ctx.bits), -(ctx.bits / 2));
  auto decreasing_or_vanishing = [&](const std::vector<BigReal>& v) {
    return strictly_decreasing(v) ||
           std::all_of(v.begin(), v.end(), [&](const BigReal& x) { return x < tol; });
  };
  for (long d = 1; d <= d_max; ++d) {
    std::vector<BigReal> jar, jar2, jar3, gap;
    const RationalPolynomial h = laguerre_target(LaguerreForm::WA, d);
    for (long r_long : r_grid) {
      const ExactRational r(r_long);
      if (r_long < 1) throw DomainError("jar check requires r >= 1");
      report.identities_hold = report.identities_hold && laguerre_shift_identity(d, r);
      const long wp = laguerre_bits(d, r, ctx);
      const BigReal rr(r, wp);
      const BigReal two_over_r = BigReal(2L, wp) / rr;
      const RealPolynomial ld = laguerre_at_center(d, r, r, wp);
      const RealPolynomial ld1 = laguerre_at_center(d - 1, r, r, wp);
      const RealPolynomial target = to_real(h, wp);

      RealPolynomial p_jar = ld - ld1;
      p_jar *= pow(rr * 2L, BigReal(ExactRational(d, 2), wp)) * BigReal(gamma_ratio(r, d), wp);
      RealPolynomial p3 = ld;
      p3 *= pow(two_over_r, BigReal(ExactRational(d, 2), wp));
      RealPolynomial p3_prev = ld1;
      p3_prev *= pow(two_over_r, BigReal(ExactRational(d - 1, 2), wp));
      RealPolynomial shifted_prev = p3_prev;
      shifted_prev *= sqrt(two_over_r);
      const RealPolynomial p2 = p3 - shifted_prev;

      JarRow row;
      row.d = d;
      row.r = r_long;
      row.jar_deviation = sup_distance(p_jar, target).rounded(ctx.bits);
      row.jar2_deviation = sup_distance(p2, target).rounded(ctx.bits);
      row.jar3_deviation = sup_distance(p3, target).rounded(ctx.bits);
      row.jar_gap = sup_distance(p_jar, p2).rounded(ctx.bits);
      const RealPolynomial wa = laguerre_renormalized(LaguerreForm::WA, d, r, ctx.with_bits(wp));
      row.wa_residual = sup_distance(p_jar, wa).rounded(ctx.bits);
      const BigReal rd = pow(rr, d) * BigReal(gamma_ratio(r, d), wp);
      row.gamma_bound = abs(rd - BigReal(1L, wp)) < BigReal(ExactRational(2 * d * d, r_long), wp);
      residuals_ok = residuals_ok && row.wa_residual < tol;
      bounds_ok = bounds_ok && row.gamma_bound;
      jar.push_back(row.jar_deviation);
      jar2.push_back(row.jar2_deviation);
      jar3.push_back(row.jar3_deviation);
      gap.push_back(row.jar_gap);
      report.rows.push_back(std::move(row));
    }
    decreasing_ok = decreasing_ok && decreasing_or_vanishing(jar) &&
                    decreasing_or_vanishing(jar2) && decreasing_or_vanishing(jar3) &&
                    decreasing_or_vanishing(gap);
  }
  report.passed = report.identities_hold && residuals_ok && bounds_ok && decreasing_ok;
  return report;
}

// ---------------------------------------------------------- data coherence

CoherenceReport data_coherence(const SequenceId& id, const std::vector<long>& grid,
                               const PrecisionContext& ctx) {
  if (!has_simplified_variant(id)) {
    throw UnsupportedError(id.name() + " has a single data variant");
  }
  CoherenceReport report;
  report.subject = id.name();
  report.grid = grid;
  for (long n : grid) {
    const HJData e = data_for(id, n, DataVariant::Exact, ctx);
    const HJData s = data_for(id, n, DataVariant::Simplified, ctx);
    report.a_gap.push_back(abs(e.A - s.A) / e.delta);
    report.delta_gap.push_back(abs(s.delta / e.delta - BigReal(1L, ctx.bits)));
    report.kappa_exact.push_back(e.kappa);
    report.kappa_simple.push_back(s.kappa);
  }
  return report;
}

}  // namespace jensen
