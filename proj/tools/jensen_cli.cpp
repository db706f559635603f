// jensen: command-line front end for sequence generation, renormalization,
// convergence measurement, exact root analysis and threshold scans.
//
// Exit codes: 0 success, 1 assertion failure, 2 domain error, 3 precision failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jensen/analysis.hpp"
#include "jensen/errors.hpp"
#include "jensen/report_io.hpp"
#include "jensen/special_functions.hpp"

namespace {

using namespace jensen;

constexpr int kExitAssert = 1;
constexpr int kExitDomain = 2;
constexpr int kExitPrecision = 3;

struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string family = "partition";
  bool reciprocal = false;
  long k = 2;
  std::string beta = "0";
  std::string a = "0", b = "1/2", c = "1";
  long d = 1;
  std::optional<long> n;
  std::string grid;
  std::string data = "simple";
  long precision_bits = 0;
  long max_terms = 0;
  std::string output = "table";
  std::string out;
  int workers = 1;
  std::vector<std::string> asserts;
  long nmax = 2000;
  long m = 2;
  std::string curve;
  std::string form = "all";
};

// ------------------------------------------------------------------ parsing

SequenceId family_from(const Config& cfg) {
  SequenceId id;
  if (cfg.family == "partition") {
    id = SequenceId::partition();
  } else if (cfg.family == "overpartition") {
    id = SequenceId::overpartition();
  } else if (cfg.family == "kregular") {
    id = SequenceId::kregular(cfg.k);
  } else if (cfg.family == "gamma") {
    id = SequenceId::gamma(parse_rational(cfg.beta));
  } else if (cfg.family == "powerexp") {
    id = SequenceId::power_exp(parse_rational(cfg.a), parse_rational(cfg.b), parse_rational(cfg.c));
  } else if (cfg.family == "negselfpower") {
    id = SequenceId::neg_self_power();
  } else {
    throw DomainError("unknown family '" + cfg.family + "'");
  }
  id.validate();
  return cfg.reciprocal ? SequenceId::reciprocal_of(id) : id;
}

DataVariant variant_from(const std::string& s) {
  if (s == "exact") return DataVariant::Exact;
  if (s == "simple") return DataVariant::Simplified;
  throw DomainError("--data must be exact or simple");
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw DomainError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw DomainError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

// "a,b,c", "start:stop:+step" or "start:stop:xfactor".
std::vector<long> parse_grid(const std::string& text) {
  std::vector<long> grid;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3 || parts[2].size() < 2) throw DomainError("bad grid '" + text + "'");
    const long start = parse_long(parts[0]);
    const long stop = parse_long(parts[1]);
    const long step = parse_long(parts[2].substr(1));
    if (parts[2][0] == '+') {
      if (step <= 0) throw DomainError("grid step must be positive");
      for (long v = start; v <= stop; v += step) grid.push_back(v);
    } else if (parts[2][0] == 'x') {
      if (step <= 1 || start <= 0) throw DomainError("geometric grid needs factor > 1 and start > 0");
      for (long v = start; v <= stop; v *= step) grid.push_back(v);
    } else {
      throw DomainError("grid step must start with + or x");
    }
  } else {
    for (const auto& p : split(text, ',')) grid.push_back(parse_long(p));
  }
  if (grid.empty()) throw DomainError("empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw DomainError("grid must be strictly increasing");
  }
  return grid;
}

std::vector<long> grid_or_n(const Config& cfg) {
  if (!cfg.grid.empty()) return parse_grid(cfg.grid);
  if (cfg.n) return {*cfg.n};
  throw DomainError("either --n or --grid is required");
}

long require_n(const Config& cfg) {
  if (!cfg.n) throw DomainError("--n is required");
  return *cfg.n;
}

PrecisionContext context_from(const Config& cfg) {
  PrecisionContext ctx;
  if (cfg.precision_bits > 0) {
    ctx.bits = cfg.precision_bits;
  } else if (const char* env = std::getenv("JENSEN_PRECISION_BITS")) {
    ctx.bits = parse_long(env);
  }
  if (cfg.max_terms > 0) ctx.max_terms = cfg.max_terms;
  ctx.validate();
  return ctx;
}

// ------------------------------------------------------------------ output

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render(const Table& t, const std::string& format) {
  std::string out;
  if (format == "csv") {
    out += csv_row(t.header);
    for (const auto& r : t.rows) out += csv_row(r);
    return out;
  }
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) s += "  ";
      s += r[i];
      if (i + 1 < r.size()) s += std::string(width[i] - r[i].size(), ' ');
    }
    return s + "\n";
  };
  out += line(t.header);
  for (const auto& r : t.rows) out += line(r);
  return out;
}

struct Output {
  Json json;
  std::vector<Table> tables;
};

std::string render(const Output& o, const std::string& format) {
  if (format == "json") return o.json.dump(2) + "\n";
  if (format != "csv" && format != "table") throw DomainError("--output must be csv, json or table");
  std::string out;
  for (std::size_t i = 0; i < o.tables.size(); ++i) {
    if (i) out += "\n";
    out += render(o.tables[i], format);
  }
  return out;
}

std::vector<std::string> reals_row(std::vector<std::string> head, const std::vector<BigReal>& v) {
  for (const auto& x : v) head.push_back(format_real(x));
  return head;
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// -------------------------------------------------------------- assertions

struct Assertion {
  std::string key;
  std::string op;
  std::string value;
};

Assertion parse_assertion(const std::string& text) {
  for (const char* op : {"<=", ">=", "="}) {
    const auto pos = text.find(op);
    if (pos != std::string::npos) return {text.substr(0, pos), op, text.substr(pos + std::string(op).size())};
  }
  return {text, "", ""};
}

[[noreturn]] void unknown_assertion(const std::string& text) {
  throw DomainError("unsupported assertion '" + text + "' for this command");
}

void check(bool ok, const std::string& text) {
  if (!ok) throw AssertionFailure("assertion failed: " + text);
}

// ----------------------------------------------------------------- commands

Output cmd_seq(const Config& cfg) {
  const SequenceId id = family_from(cfg);
  const PrecisionContext ctx = context_from(cfg);
  const auto grid = grid_or_n(cfg);
  Output o;
  Table t{{"n", "value"}, {}};
  Json rows = Json::array();
  for (long n : grid) {
    std::string v;
    if (id.is_integer_family()) {
      v = integer_term(id, n).get_str();
    } else if (id.has_rational_terms()) {
      v = to_string(rational_term(id, n));
    } else {
      v = format_real(sequence_term(id, n, ctx));
    }
    t.rows.push_back({std::to_string(n), v});
    rows.push_back(Json{{"n", n}, {"value", v}});
  }
  o.json = Json{{"report", "sequence"}, {"family", id.name()}, {"rows", rows}};
  o.tables.push_back(std::move(t));
  if (!cfg.asserts.empty()) unknown_assertion(cfg.asserts.front());
  return o;
}

Output cmd_renorm(const Config& cfg) {
  if (cfg.d < 1) throw DomainError("renorm requires --d >= 1");
  const SequenceId id = family_from(cfg);
  const PrecisionContext ctx = context_from(cfg);
  const long n = require_n(cfg);
  const HJData data = data_for(id, n, variant_from(cfg.data), ctx);
  const HermiteDeviation dev = hermite_deviation(id, cfg.d, n, data, ctx);
  const RealPolynomial target = to_real(dev.target, ctx.bits);
  Output o;
  o.json = Json{{"report", "renormalization"},
                {"family", id.name()},
                {"d", cfg.d},
                {"n", n},
                {"data", to_json(data)},
                {"renormalized", to_json(dev.jensen)},
                {"reciprocal", to_json(dev.reciprocal)},
                {"target", to_json(dev.target)},
                {"sup_deviation", format_real(dev.jensen_deviation)},
                {"reciprocal_sup_deviation", format_real(dev.reciprocal_deviation)}};
  BigReal curve_sup(ctx.bits);
  BigReal target_sup(ctx.bits);
  if (!cfg.curve.empty()) {
    const auto parts = split(cfg.curve, ':');
    if (parts.size() != 3) throw DomainError("--curve expects lo:hi:step");
    const ExactRational lo = parse_rational(parts[0]);
    const ExactRational hi = parse_rational(parts[1]);
    const ExactRational step = parse_rational(parts[2]);
    if (step <= 0 || hi < lo) throw DomainError("--curve needs lo <= hi and step > 0");
    Table t{{"X", "renormalized", "target"}, {}};
    Json samples = Json::array();
    for (ExactRational x = lo; x <= hi; x += step) {
      const BigReal xr(x, ctx.bits);
      const BigReal yr = dev.jensen.evaluate(xr);
      const BigReal yt = target.evaluate(xr);
      curve_sup = max(curve_sup, abs(yr - yt));
      target_sup = max(target_sup, abs(yt));
      t.rows.push_back({format_real(xr), format_real(yr), format_real(yt)});
      samples.push_back(Json::array({format_real(xr), format_real(yr), format_real(yt)}));
    }
    o.json["curve"] = samples;
    o.json["curve_sup_deviation"] = format_real(curve_sup);
    o.json["target_sup"] = format_real(target_sup);
    o.tables.push_back(std::move(t));
  } else {
    Table t{{"k", "renormalized", "reciprocal", "target"}, {}};
    for (long k = 0; k <= cfg.d; ++k) {
      t.rows.push_back({std::to_string(k), format_real(dev.jensen.coeff(k)),
                        format_real(dev.reciprocal.coeff(k)), format_real(target.coeff(k))});
    }
    o.tables.push_back(std::move(t));
    o.tables.push_back(Table{{"sup_deviation", "reciprocal_sup_deviation"},
                             {{format_real(dev.jensen_deviation), format_real(dev.reciprocal_deviation)}}});
  }
  for (const auto& text : cfg.asserts) {
    const Assertion a = parse_assertion(text);
    if (a.key == "deviation" && a.op == "<=") {
      check(dev.jensen_deviation <= BigReal::parse(a.value, ctx.bits), text);
    } else if (a.key == "curve" && a.op == "<=" && !cfg.curve.empty()) {
      // bound relative to max |target| on the sampled range
      check(curve_sup <= target_sup * BigReal::parse(a.value, ctx.bits), text);
    } else {
      unknown_assertion(text);
    }
  }
  return o;
}

Output cmd_converge(const Config& cfg) {
  if (cfg.d < 1) throw DomainError("converge requires --d >= 1");
  const SequenceId id = family_from(cfg);
  const PrecisionContext ctx = context_from(cfg);
  const ConvergenceReport r =
      convergence_report(id, cfg.d, grid_or_n(cfg), variant_from(cfg.data), ctx, cfg.workers);
  Output o;
  o.json = to_json(r);
  Table t{{"n", "sup_deviation", "reciprocal_sup_deviation"}, {}};
  for (long k = 0; k <= r.d; ++k) t.header.push_back("dev_c" + std::to_string(k));
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    t.rows.push_back(reals_row({std::to_string(r.grid[i]), format_real(r.sup_deviation[i]),
                                format_real(r.reciprocal_sup_deviation[i])},
                               r.deviations[i]));
  }
  o.tables.push_back(std::move(t));
  for (const auto& text : cfg.asserts) {
    if (text == "decreasing") {
      check(r.strictly_decreasing(), text);
    } else {
      unknown_assertion(text);
    }
  }
  return o;
}

Output cmd_roots(const Config& cfg) {
  const SequenceId id = family_from(cfg);
  const auto grid = grid_or_n(cfg);
  Output o;
  std::vector<RootClassification> results = parallel_map<RootClassification>(
      static_cast<long>(grid.size()), cfg.workers,
      [&](long i) { return classify_roots(id, cfg.d, grid[static_cast<std::size_t>(i)]); });
  Json arr = Json::array();
  Table t{{"n", "which", "degree", "real_root_count", "distinct_roots", "squarefree", "verdict"}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    arr.push_back(to_json(results[i]));
    for (const RootReport* r : {&results[i].jensen, &results[i].reciprocal}) {
      t.rows.push_back({std::to_string(grid[i]), r == &results[i].jensen ? "J" : "K",
                        std::to_string(r->degree), std::to_string(r->real_root_count),
                        std::to_string(r->distinct_roots), r->squarefree ? "true" : "false",
                        to_string(*r->verdict)});
    }
  }
  o.json = grid.size() == 1 ? arr[0] : arr;
  o.tables.push_back(std::move(t));
  for (const auto& text : cfg.asserts) {
    const Assertion a = parse_assertion(text);
    if (a.key != "verdict" || a.op != "=") unknown_assertion(text);
    for (const auto& r : results) {
      check(to_string(*r.jensen.verdict) == a.value && to_string(*r.reciprocal.verdict) == a.value,
            text + " (" + r.jensen.subject + ")");
    }
  }
  return o;
}

Output threshold_output(const ThresholdReport& r, const std::vector<std::string>& asserts) {
  Output o;
  o.json = to_json(r);
  Table t{{"subject", "property", "first_index", "n_max", "n0", "failures"}, {}};
  t.rows.push_back({r.subject, r.property, std::to_string(r.first_index), std::to_string(r.n_max),
                    std::to_string(r.n0), join(r.failures)});
  if (r.n0_strict) {
    t.header.push_back("n0_strict");
    t.header.push_back("failures_strict");
    t.rows.back().push_back(std::to_string(*r.n0_strict));
    t.rows.back().push_back(join(r.failures_strict));
  }
  o.tables.push_back(std::move(t));
  for (const auto& text : asserts) {
    const Assertion a = parse_assertion(text);
    if (a.key == "n0" && a.op == "=") {
      check(r.n0 == parse_long(a.value), text + " (got n0=" + std::to_string(r.n0) + ")");
    } else if (a.key == "n0_strict" && a.op == "=" && r.n0_strict) {
      check(*r.n0_strict == parse_long(a.value), text);
    } else if (a.key == "failures" && a.op == "=") {
      check(r.failures.size() == static_cast<std::size_t>(parse_long(a.value)), text);
    } else {
      unknown_assertion(text);
    }
  }
  return o;
}

Output cmd_logconcave(const Config& cfg) {
  return threshold_output(log_concavity_scan(family_from(cfg), cfg.nmax, cfg.workers), cfg.asserts);
}

Output cmd_threshold(const Config& cfg) {
  return threshold_output(hyperbolicity_threshold(family_from(cfg), cfg.d, cfg.nmax, cfg.workers),
                          cfg.asserts);
}

Output cmd_kcc(const Config& cfg) {
  const SequenceId id = family_from(cfg);
  const PrecisionContext ctx = context_from(cfg);
  const KccReport r = kcc_error_fit(id, cfg.m, parse_grid(cfg.grid), ctx, cfg.workers);
  Output o;
  o.json = to_json(r);
  Table t{{"j", "slope"}, {}};
  for (long n : r.grid) t.header.push_back("error_n" + std::to_string(n));
  for (std::size_t j = 0; j < r.errors.size(); ++j) {
    std::ostringstream s;
    s.precision(6);
    s << r.slopes[j];
    t.rows.push_back(reals_row({std::to_string(j + 1), s.str()}, r.errors[j]));
  }
  o.tables.push_back(std::move(t));
  for (const auto& text : cfg.asserts) {
    const Assertion a = parse_assertion(text);
    if (a.key == "slope" && a.op == "<=") {
      const double bound = std::stod(a.value);
      for (double s : r.slopes) check(s <= bound, text);
    } else {
      unknown_assertion(text);
    }
  }
  return o;
}

Output cmd_laguerre(const Config& cfg) {
  const PrecisionContext ctx = context_from(cfg);
  const auto grid = parse_grid(cfg.grid);
  std::vector<LaguerreForm> forms;
  if (cfg.form == "all") {
    forms = {LaguerreForm::WA, LaguerreForm::WB, LaguerreForm::Lagher, LaguerreForm::Laghera};
  } else if (cfg.form == "wa") {
    forms = {LaguerreForm::WA};
  } else if (cfg.form == "wb") {
    forms = {LaguerreForm::WB};
  } else if (cfg.form == "lagher") {
    forms = {LaguerreForm::Lagher};
  } else if (cfg.form == "laghera") {
    forms = {LaguerreForm::Laghera};
  } else {
    throw DomainError("--form must be wa, wb, lagher, laghera or all");
  }
  Output o;
  Json arr = Json::array();
  Table t{{"form", "r", "sup_deviation"}, {}};
  for (long k = 0; k <= cfg.d; ++k) t.header.push_back("dev_c" + std::to_string(k));
  std::vector<ConvergenceReport> reports;
  for (LaguerreForm f : forms) {
    reports.push_back(laguerre_limit_check(f, cfg.d, grid, ctx, cfg.workers));
    const auto& r = reports.back();
    arr.push_back(to_json(r));
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
      t.rows.push_back(reals_row({r.subject, std::to_string(r.grid[i]), format_real(r.sup_deviation[i])},
                                 r.deviations[i]));
    }
  }
  o.json = Json{{"report", "laguerre"}, {"d", cfg.d}, {"forms", arr}};
  o.tables.push_back(std::move(t));
  for (const auto& text : cfg.asserts) {
    if (text != "decreasing") unknown_assertion(text);
    for (const auto& r : reports) {
      // d <= 1 forms can be exact for every r
      const bool exact = std::all_of(r.sup_deviation.begin(), r.sup_deviation.end(),
                                     [](const BigReal& x) { return x.is_zero(); });
      check(exact || r.strictly_decreasing(), text + " (" + r.subject + ")");
    }
  }
  return o;
}

Output cmd_jar(const Config& cfg) {
  const PrecisionContext ctx = context_from(cfg);
  const JarReport r = jar_equivalence_check(cfg.d, parse_grid(cfg.grid), ctx);
  Output o;
  o.json = to_json(r);
  Table t{{"d", "r", "jar", "jar2", "jar3", "jar_gap", "wa_residual", "gamma_bound"}, {}};
  for (const auto& row : r.rows) {
    t.rows.push_back({std::to_string(row.d), std::to_string(row.r), format_real(row.jar_deviation),
                      format_real(row.jar2_deviation), format_real(row.jar3_deviation),
                      format_real(row.jar_gap), format_real(row.wa_residual),
                      row.gamma_bound ? "true" : "false"});
  }
  o.tables.push_back(std::move(t));
  for (const auto& text : cfg.asserts) {
    if (text != "passed") unknown_assertion(text);
    check(r.passed, text);
  }
  return o;
}

Output cmd_data(const Config& cfg) {
  const SequenceId id = family_from(cfg);
  const PrecisionContext ctx = context_from(cfg);
  const auto grid = grid_or_n(cfg);
  Output o;
  Json arr = Json::array();
  Table t{{"n", "variant", "A", "kappa", "delta"}, {}};
  std::vector<DataVariant> variants{DataVariant::Exact};
  if (has_simplified_variant(id)) variants.push_back(DataVariant::Simplified);
  for (long n : grid) {
    for (DataVariant v : variants) {
      const HJData h = data_for(id, n, v, ctx);
      Json j = to_json(h);
      j["n"] = n;
      arr.push_back(j);
      t.rows.push_back({std::to_string(n), v == DataVariant::Exact ? "exact" : "simple",
                        format_real(h.A), std::to_string(h.kappa), format_real(h.delta)});
    }
  }
  o.json = Json{{"report", "data"}, {"family", id.name()}, {"rows", arr}};
  o.tables.push_back(std::move(t));
  if (!cfg.asserts.empty()) unknown_assertion(cfg.asserts.front());
  return o;
}

Output cmd_coherence(const Config& cfg) {
  const SequenceId id = family_from(cfg);
  const PrecisionContext ctx = context_from(cfg);
  const CoherenceReport r = data_coherence(id, parse_grid(cfg.grid), ctx);
  Output o;
  o.json = to_json(r);
  Table t{{"n", "a_gap", "delta_gap", "kappa_exact", "kappa_simple"}, {}};
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    t.rows.push_back({std::to_string(r.grid[i]), format_real(r.a_gap[i]), format_real(r.delta_gap[i]),
                      std::to_string(r.kappa_exact[i]), std::to_string(r.kappa_simple[i])});
  }
  o.tables.push_back(std::move(t));
  for (const auto& text : cfg.asserts) {
    const Assertion a = parse_assertion(text);
    if (text == "decreasing") {
      for (std::size_t i = 1; i < r.grid.size(); ++i) {
        check(r.a_gap[i] < r.a_gap[i - 1] && r.delta_gap[i] < r.delta_gap[i - 1],
              text + " (n=" + std::to_string(r.grid[i]) + ")");
      }
    } else if (a.key == "gap" && a.op == "<=") {
      const BigReal bound = BigReal::parse(a.value, ctx.bits);
      check(r.a_gap.back() <= bound && r.delta_gap.back() <= bound,
            text + " (a_gap=" + format_real(r.a_gap.back()) + ")");
    } else {
      unknown_assertion(text);
    }
  }
  return o;
}

void add_family_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--family", cfg.family,
                  "partition | overpartition | kregular | gamma | powerexp | negselfpower");
  sub->add_flag("--reciprocal", cfg.reciprocal, "use 1/alpha(n)");
  sub->add_option("--k", cfg.k, "k for kregular");
  sub->add_option("--beta", cfg.beta, "beta for gamma (rational)");
  sub->add_option("--a", cfg.a, "a for powerexp (rational)");
  sub->add_option("--b", cfg.b, "b for powerexp (rational)");
  sub->add_option("--c", cfg.c, "c for powerexp (rational)");
}

void add_common_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--precision-bits", cfg.precision_bits, "mantissa bits (default 192)");
  sub->add_option("--max-terms", cfg.max_terms, "series and recurrence step cap");
  sub->add_option("--output", cfg.output, "csv | json | table");
  sub->add_option("--out", cfg.out, "write to this file instead of stdout");
  sub->add_option("--workers", cfg.workers, "worker threads for grid scans");
  sub->add_option("--assert", cfg.asserts, "property to check; exit 1 when it fails");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jensen polynomials of partition-type sequences"};
  app.require_subcommand(1);
  Config cfg;

  struct Command {
    CLI::App* app;
    Output (*run)(const Config&);
  };
  std::vector<Command> commands;
  auto add = [&](const char* name, const char* help, Output (*run)(const Config&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common_options(sub, cfg);
    commands.push_back({sub, run});
    return sub;
  };

  auto* seq = add("seq", "sequence values", cmd_seq);
  add_family_options(seq, cfg);
  seq->add_option("--n", cfg.n);
  seq->add_option("--grid", cfg.grid, "a,b,c | start:stop:+step | start:stop:xfactor");

  auto* renorm = add("renorm", "renormalized Jensen polynomial and its Hermite target", cmd_renorm);
  add_family_options(renorm, cfg);
  renorm->add_option("--d", cfg.d);
  renorm->add_option("--n", cfg.n);
  renorm->add_option("--data", cfg.data, "exact | simple");
  renorm->add_option("--curve", cfg.curve, "lo:hi:step samples of both curves");

  auto* converge = add("converge", "deviation from the Hermite limit over a grid", cmd_converge);
  add_family_options(converge, cfg);
  converge->add_option("--d", cfg.d);
  converge->add_option("--n", cfg.n);
  converge->add_option("--grid", cfg.grid);
  converge->add_option("--data", cfg.data, "exact | simple");

  auto* roots = add("roots", "exact real-root analysis of J and K", cmd_roots);
  add_family_options(roots, cfg);
  roots->add_option("--d", cfg.d);
  roots->add_option("--n", cfg.n);
  roots->add_option("--grid", cfg.grid);

  auto* logc = add("logconcave", "log-concavity scan", cmd_logconcave);
  add_family_options(logc, cfg);
  logc->add_option("--nmax", cfg.nmax);

  auto* thr = add("threshold", "hyperbolicity threshold scan", cmd_threshold);
  add_family_options(thr, cfg);
  thr->add_option("--d", cfg.d);
  thr->add_option("--nmax", cfg.nmax);

  auto* kcc = add("kcc", "log-ratio expansion error and fitted slopes", cmd_kcc);
  add_family_options(kcc, cfg);
  kcc->add_option("--m", cfg.m);
  kcc->add_option("--grid", cfg.grid)->required();

  auto* lag = add("laguerre", "generalized Laguerre limits", cmd_laguerre);
  lag->add_option("--d", cfg.d);
  lag->add_option("--grid", cfg.grid, "values of r")->required();
  lag->add_option("--form", cfg.form, "wa | wb | lagher | laghera | all");

  auto* jar = add("jar", "equivalence chain between the Laguerre limit forms", cmd_jar);
  jar->add_option("--d", cfg.d, "largest degree");
  jar->add_option("--grid", cfg.grid, "values of r")->required();

  auto* data = add("data", "Hermite-Jensen data {A, kappa, delta}", cmd_data);
  add_family_options(data, cfg);
  data->add_option("--n", cfg.n);
  data->add_option("--grid", cfg.grid);

  auto* coh = add("coherence", "exact against simplified data", cmd_coherence);
  add_family_options(coh, cfg);
  coh->add_option("--grid", cfg.grid)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    for (const auto& c : commands) {
      if (!c.app->parsed()) continue;
      const std::string text = render(c.run(cfg), cfg.output);
      if (cfg.out.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw DomainError("cannot open " + cfg.out);
        f << text;
      }
    }
  } catch (const AssertionFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitAssert;
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what();
    if (e.suggested_bits() > 0) std::cerr << " (retry with --precision-bits " << e.suggested_bits() << ")";
    std::cerr << "\n";
    return kExitPrecision;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
