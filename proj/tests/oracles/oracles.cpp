#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

namespace {

// Visits every partition of `rest` with parts <= max_part, one leaf each.
long walk(long rest, long max_part, long avoid) {
  if (rest == 0) return 1;
  long count = 0;
  for (long part = std::min(rest, max_part); part >= 1; --part) {
    if (avoid != 0 && part % avoid == 0) continue;
    count += walk(rest - part, part, avoid);
  }
  return count;
}

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Remainder and quotient of a by b (b nonzero).
std::pair<Poly, Poly> divide(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly euclid(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

mpq_class eval(const Poly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Sign variations in the coefficients of (1+x)^d P((a + b x)/(1 + x)).
long descartes(const Poly& p, const mpq_class& a, const mpq_class& b) {
  const std::size_t d = p.size() - 1;
  Poly q(d + 1, 0);
  for (std::size_t i = 0; i <= d; ++i) {
    Poly term{p[i]};
    for (std::size_t t = 0; t < i; ++t) term = mul(term, Poly{a, b});
    for (std::size_t t = i; t < d; ++t) term = mul(term, Poly{1, 1});
    for (std::size_t t = 0; t < term.size(); ++t) q[t] += term[t];
  }
  long changes = 0;
  int last = 0;
  for (const auto& c : q) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

long count_open(const Poly& p, const mpq_class& a, const mpq_class& b) {
  const long v = descartes(p, a, b);
  if (v <= 1) return v;
  mpq_class m = (a + b) / 2;
  m.canonicalize();
  return count_open(p, a, m) + count_open(p, m, b) + (eval(p, m) == 0 ? 1 : 0);
}

}  // namespace

long enumerate_partitions(long n, long avoid) { return walk(n, n, avoid); }

std::vector<mpz_class> overpartition_product(long n_max) {
  std::vector<mpz_class> s(static_cast<std::size_t>(n_max) + 1, 0);
  s[0] = 1;
  for (long k = 1; k <= n_max; ++k) {
    // times (1 + q^k)
    for (long i = n_max; i >= k; --i) s[i] += s[i - k];
    // times 1/(1 - q^k) = 1 + q^k + q^{2k} + ..., expanded term by term
    std::vector<mpz_class> out(s.size(), 0);
    for (long i = 0; i <= n_max; ++i) {
      for (long e = 0; i + e <= n_max; e += k) out[i + e] += s[i];
    }
    s = std::move(out);
  }
  return s;
}

void euler_gamma(mpfr_t out, long bits) {
  const long prec = bits + 64;
  // error is about pi e^{-4n}
  const long n = static_cast<long>(std::ceil(bits * std::log(2.0) / 4.0)) + 4;
  mpfr_t a, b, u, v, t;
  for (auto* x : {&a, &b, &u, &v, &t}) mpfr_init2(*x, prec);
  mpfr_set_ui(t, n, MPFR_RNDN);
  mpfr_log(a, t, MPFR_RNDN);
  mpfr_neg(a, a, MPFR_RNDN);
  mpfr_set_ui(b, 1, MPFR_RNDN);
  mpfr_set(u, a, MPFR_RNDN);
  mpfr_set_ui(v, 1, MPFR_RNDN);
  const unsigned long n2 = static_cast<unsigned long>(n * n);
  for (long k = 1; k <= 5 * n; ++k) {
    const unsigned long uk = static_cast<unsigned long>(k);
    mpfr_mul_ui(b, b, n2, MPFR_RNDN);
    mpfr_div_ui(b, b, uk * uk, MPFR_RNDN);
    mpfr_mul_ui(a, a, n2, MPFR_RNDN);
    mpfr_div_ui(a, a, uk, MPFR_RNDN);
    mpfr_add(a, a, b, MPFR_RNDN);
    mpfr_div_ui(a, a, uk, MPFR_RNDN);
    mpfr_add(u, u, a, MPFR_RNDN);
    mpfr_add(v, v, b, MPFR_RNDN);
  }
  mpfr_div(out, u, v, MPFR_RNDN);
  for (auto* x : {&a, &b, &u, &v, &t}) mpfr_clear(*x);
}

std::vector<mpq_class> bernoulli_akiyama_tanigawa(long n) {
  std::vector<mpq_class> result;
  std::vector<mpq_class> row(static_cast<std::size_t>(n) + 1);
  for (long m = 0; m <= n; ++m) {
    row[m] = mpq_class(1, m + 1);
    for (long j = m; j >= 1; --j) {
      row[j - 1] = j * (row[j - 1] - row[j]);
      row[j - 1].canonicalize();
    }
    result.push_back(row[0]);
  }
  // the transform yields B_1 = +1/2
  if (n >= 1) result[1] = -result[1];
  return result;
}

std::vector<mpz_class> hermite_recurrence(long d) {
  std::vector<mpz_class> prev{1};
  if (d == 0) return prev;
  std::vector<mpz_class> cur{0, 2};
  for (long k = 1; k < d; ++k) {
    std::vector<mpz_class> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

long bisection_root_count(const std::vector<mpz_class>& coeffs) {
  Poly p(coeffs.begin(), coeffs.end());
  trim(p);
  if (p.empty()) throw std::invalid_argument("zero polynomial");
  if (p.size() == 1) return 0;
  const Poly g = euclid(p, derivative(p));
  Poly sq = divide(p, g).first;
  if (sq.size() == 1) return 0;
  mpq_class bound = 0;
  for (std::size_t i = 0; i + 1 < sq.size(); ++i) bound = std::max(bound, mpq_class(abs(sq[i] / sq.back())));
  bound += 1;
  return count_open(sq, -bound, bound);
}

void zeta2(mpfr_t out, long bits) {
  const long prec = bits + 64;
  const unsigned long n = 100000;
  mpfr_t s, t;
  mpfr_init2(s, prec);
  mpfr_init2(t, prec);
  mpfr_set_ui(s, 0, MPFR_RNDN);
  for (unsigned long k = n - 1; k >= 1; --k) {
    mpfr_set_ui(t, k, MPFR_RNDN);
    mpfr_sqr(t, t, MPFR_RNDN);
    mpfr_ui_div(t, 1, t, MPFR_RNDN);
    mpfr_add(s, s, t, MPFR_RNDN);
  }
  // sum_{k>=N} k^-2 = 1/N + 1/(2N^2) + 1/(6N^3) - 1/(30N^5) + 1/(42N^7) - ...
  const double coef[][2] = {{1, 1}, {1, 2}, {1, 6}, {-1, 30}, {1, 42}, {-1, 30}};
  const unsigned long power[] = {1, 2, 3, 5, 7, 9};
  for (int i = 0; i < 6; ++i) {
    mpfr_set_ui(t, n, MPFR_RNDN);
    mpfr_pow_ui(t, t, power[i], MPFR_RNDN);
    mpfr_mul_d(t, t, coef[i][1], MPFR_RNDN);
    mpfr_d_div(t, coef[i][0], t, MPFR_RNDN);
    mpfr_add(s, s, t, MPFR_RNDN);
  }
  mpfr_set(out, s, MPFR_RNDN);
  mpfr_clear(s);
  mpfr_clear(t);
}

void bessel_i_int(mpfr_t out, long alpha, double z, long bits) {
  const long prec = bits + 64;
  mpfr_t term, sum, q, half;
  for (auto* x : {&term, &sum, &q, &half}) mpfr_init2(*x, prec);
  mpfr_set_d(half, z / 2, MPFR_RNDN);
  // (z/2)^alpha / alpha!
  mpfr_pow_ui(term, half, static_cast<unsigned long>(alpha), MPFR_RNDN);
  for (long i = 2; i <= alpha; ++i) mpfr_div_ui(term, term, static_cast<unsigned long>(i), MPFR_RNDN);
  mpfr_sqr(q, half, MPFR_RNDN);
  mpfr_set(sum, term, MPFR_RNDN);
  for (long j = 1; j < 100000; ++j) {
    mpfr_mul(term, term, q, MPFR_RNDN);
    mpfr_div_ui(term, term, static_cast<unsigned long>(j * (j + alpha)), MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    if (mpfr_zero_p(term) || mpfr_get_exp(term) < mpfr_get_exp(sum) - prec) break;
  }
  mpfr_set(out, sum, MPFR_RNDN);
  for (auto* x : {&term, &sum, &q, &half}) mpfr_clear(*x);
}

}  // namespace oracle
