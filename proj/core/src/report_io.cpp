#include "jensen/report_io.hpp"

#include <sstream>

#include "jensen/errors.hpp"

namespace jensen {

namespace {

Json reals(const std::vector<BigReal>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(format_real(x));
  return a;
}

std::string join(const std::vector<long>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string interval_text(const RootInterval& iv) {
  return "(" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
}

}  // namespace

std::string format_real(const BigReal& x) { return x.to_string(kRealDigits); }

// ------------------------------------------------------------ polynomials

Json to_json(const RationalPolynomial& p) {
  Json c = Json::array();
  for (const auto& q : p.coeffs()) c.push_back(to_string(q));
  return Json{{"kind", "rational"}, {"coefficients", c}};
}

Json to_json(const RealPolynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(format_real(x));
  return Json{{"kind", "real"}, {"coefficients", c}};
}

RationalPolynomial rational_polynomial_from_json(const Json& j) {
  if (j.at("kind") != "rational") throw DomainError("expected a rational polynomial");
  std::vector<ExactRational> c;
  for (const auto& s : j.at("coefficients")) c.push_back(parse_rational(s.get<std::string>()));
  return RationalPolynomial(std::move(c));
}

RealPolynomial real_polynomial_from_json(const Json& j, long prec) {
  const std::string kind = j.at("kind");
  if (kind != "real" && kind != "rational") throw DomainError("unknown polynomial kind");
  std::vector<BigReal> c;
  for (const auto& s : j.at("coefficients")) c.push_back(BigReal::parse(s.get<std::string>(), prec));
  return RealPolynomial(std::move(c));
}

// ----------------------------------------------------------------- reports

Json to_json(const HJData& data) {
  return Json{{"family", data.family.name()},
              {"variant", data.variant == DataVariant::Exact ? "exact" : "simple"},
              {"A", format_real(data.A)},
              {"kappa", data.kappa},
              {"delta", format_real(data.delta)}};
}

Json to_json(const ConvergenceReport& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    Json row{{r.parameter, r.grid[i]},
             {"sup_deviation", format_real(r.sup_deviation[i])},
             {"deviations", reals(r.deviations[i])}};
    if (i < r.reciprocal_sup_deviation.size()) {
      row["reciprocal_sup_deviation"] = format_real(r.reciprocal_sup_deviation[i]);
    }
    rows.push_back(std::move(row));
  }
  return Json{{"report", "convergence"},
              {"subject", r.subject},
              {"d", r.d},
              {"variant", r.variant},
              {"strictly_decreasing", r.strictly_decreasing()},
              {"rows", rows}};
}

Json to_json(const RootReport& r) {
  Json iv = Json::array();
  for (const auto& x : r.intervals) iv.push_back(Json::array({to_string(x.lo), to_string(x.hi)}));
  Json out{{"report", "roots"},
           {"subject", r.subject},
           {"degree", r.degree},
           {"real_root_count", r.real_root_count},
           {"distinct_roots", r.distinct_roots},
           {"squarefree", r.squarefree},
           {"isolating_intervals", iv}};
  if (r.verdict) out["verdict"] = to_string(*r.verdict);
  return out;
}

Json to_json(const RootClassification& r) {
  return Json{{"J", to_json(r.jensen)}, {"K", to_json(r.reciprocal)}};
}

Json to_json(const ThresholdReport& r) {
  Json out{{"report", "threshold"},
           {"subject", r.subject},
           {"property", r.property},
           {"first_index", r.first_index},
           {"n_max", r.n_max},
           {"n0", r.n0},
           {"failures", r.failures}};
  if (r.n0_strict) {
    out["n0_strict"] = *r.n0_strict;
    out["failures_strict"] = r.failures_strict;
  }
  return out;
}

Json to_json(const KccReport& r) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < r.errors.size(); ++j) {
    rows.push_back(Json{{"j", j + 1}, {"slope", r.slopes[j]}, {"errors", reals(r.errors[j])}});
  }
  return Json{{"report", "kcc"}, {"subject", r.subject}, {"m", r.m}, {"grid", r.grid}, {"rows", rows}};
}

Json to_json(const JarReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"d", row.d},
                        {"r", row.r},
                        {"jar", format_real(row.jar_deviation)},
                        {"jar2", format_real(row.jar2_deviation)},
                        {"jar3", format_real(row.jar3_deviation)},
                        {"jar_gap", format_real(row.jar_gap)},
                        {"wa_residual", format_real(row.wa_residual)},
                        {"gamma_bound", row.gamma_bound}});
  }
  return Json{{"report", "jar"},
              {"d_max", r.d_max},
              {"r_grid", r.r_grid},
              {"identities_hold", r.identities_hold},
              {"passed", r.passed},
              {"rows", rows}};
}

Json to_json(const CoherenceReport& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    rows.push_back(Json{{"n", r.grid[i]},
                        {"a_gap", format_real(r.a_gap[i])},
                        {"delta_gap", format_real(r.delta_gap[i])},
                        {"kappa_exact", r.kappa_exact[i]},
                        {"kappa_simple", r.kappa_simple[i]}});
  }
  return Json{{"report", "coherence"}, {"subject", r.subject}, {"rows", rows}};
}

// --------------------------------------------------------------------- CSV

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  out += '\n';
  return out;
}

std::string to_csv(const ConvergenceReport& r) {
  std::vector<std::string> header{r.parameter, "sup_deviation"};
  const bool recip = !r.reciprocal_sup_deviation.empty();
  if (recip) header.push_back("reciprocal_sup_deviation");
  for (long k = 0; k <= r.d; ++k) header.push_back("dev_c" + std::to_string(k));
  std::string out = csv_row(header);
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    std::vector<std::string> row{std::to_string(r.grid[i]), format_real(r.sup_deviation[i])};
    if (recip) row.push_back(format_real(r.reciprocal_sup_deviation[i]));
    for (const auto& x : r.deviations[i]) row.push_back(format_real(x));
    out += csv_row(row);
  }
  return out;
}

std::string to_csv(const std::vector<RootReport>& reports) {
  std::string out = csv_row({"subject", "degree", "real_root_count", "distinct_roots", "squarefree",
                             "verdict", "isolating_intervals"});
  for (const auto& r : reports) {
    std::string iv;
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
      if (i) iv += ';';
      iv += interval_text(r.intervals[i]);
    }
    out += csv_row({r.subject, std::to_string(r.degree), std::to_string(r.real_root_count),
                    std::to_string(r.distinct_roots), r.squarefree ? "true" : "false",
                    r.verdict ? to_string(*r.verdict) : "", iv});
  }
  return out;
}

std::string to_csv(const ThresholdReport& r) {
  std::string out = csv_row({"subject", "property", "first_index", "n_max", "n0", "failures",
                             "n0_strict", "failures_strict"});
  out += csv_row({r.subject, r.property, std::to_string(r.first_index), std::to_string(r.n_max),
                  std::to_string(r.n0), join(r.failures, " "),
                  r.n0_strict ? std::to_string(*r.n0_strict) : "", join(r.failures_strict, " ")});
  return out;
}

std::string to_csv(const KccReport& r) {
  std::vector<std::string> header{"j", "slope"};
  for (long n : r.grid) header.push_back("error_n" + std::to_string(n));
  std::string out = csv_row(header);
  for (std::size_t j = 0; j < r.errors.size(); ++j) {
    std::ostringstream slope;
    slope.precision(6);
    slope << r.slopes[j];
    std::vector<std::string> row{std::to_string(j + 1), slope.str()};
    for (const auto& e : r.errors[j]) row.push_back(format_real(e));
    out += csv_row(row);
  }
  return out;
}

std::string to_csv(const JarReport& r) {
  std::string out =
      csv_row({"d", "r", "jar", "jar2", "jar3", "jar_gap", "wa_residual", "gamma_bound"});
  for (const auto& row : r.rows) {
    out += csv_row({std::to_string(row.d), std::to_string(row.r), format_real(row.jar_deviation),
                    format_real(row.jar2_deviation), format_real(row.jar3_deviation),
                    format_real(row.jar_gap), format_real(row.wa_residual),
                    row.gamma_bound ? "true" : "false"});
  }
  return out;
}

std::string to_csv(const CoherenceReport& r) {
  std::string out = csv_row({"n", "a_gap", "delta_gap", "kappa_exact", "kappa_simple"});
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    out += csv_row({std::to_string(r.grid[i]), format_real(r.a_gap[i]), format_real(r.delta_gap[i]),
                    std::to_string(r.kappa_exact[i]), std::to_string(r.kappa_simple[i])});
  }
  return out;
}

}  // namespace jensen
