#pragma once

// JSON and CSV serialization.  Exact values print as decimal integers or
// "p/q"; reals print with up to 20 significant digits.  CSV uses a header
// row and LF line endings.  Output depends only on the report contents.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "jensen/analysis.hpp"

namespace jensen {

using Json = nlohmann::ordered_json;

constexpr int kRealDigits = 20;

std::string format_real(const BigReal& x);

// {"kind": "rational"|"real", "coefficients": ["c0", "c1", ...]}
Json to_json(const RationalPolynomial& p);
Json to_json(const RealPolynomial& p);
RationalPolynomial rational_polynomial_from_json(const Json& j);
RealPolynomial real_polynomial_from_json(const Json& j, long prec);

Json to_json(const HJData& data);
Json to_json(const ConvergenceReport& r);
Json to_json(const RootReport& r);
Json to_json(const RootClassification& r);
Json to_json(const ThresholdReport& r);
Json to_json(const KccReport& r);
Json to_json(const JarReport& r);
Json to_json(const CoherenceReport& r);

// One CSV row; fields containing commas, quotes or newlines are quoted.
std::string csv_row(const std::vector<std::string>& fields);

std::string to_csv(const ConvergenceReport& r);
std::string to_csv(const std::vector<RootReport>& r);
std::string to_csv(const ThresholdReport& r);
std::string to_csv(const KccReport& r);
std::string to_csv(const JarReport& r);
std::string to_csv(const CoherenceReport& r);

}  // namespace jensen
