#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fiberalg/decompose.hpp"
#include "fiberalg/verdict.hpp"

namespace fiberalg::io {

using nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

/// Parses a function specification. Every failure carries the JSON path of the
/// offending node, e.g. "/children/1/coeffs/0": syntax errors as ParseError,
/// invalid values with their own kind (OutsideDomain, InvalidInput).
AnalyticOracle parse_function(const json& spec);
AnalyticOracle parse_function_text(std::string_view text);
/// "blaschke" or "poly" specs.
Generator parse_generator(const json& spec);
Generator parse_generator_text(std::string_view text);

json to_json(const AnalyticOracle& f);
json to_json(const Generator& b);
/// Integers stay integers; other rationals become "p/q" strings.
json number_json(const mpq_class& q);
json complex_json(const GaussianRational& z);
json complex_json(cplx z);

/// Non-finite doubles travel as the strings "inf", "-inf", "nan".
json real_json(double x);
double real_from_json(const json& j);

struct Report {
  std::string command = "classify";
  std::string space = "h2";
  json generator;
  json g;
  Verdict verdict;
  double elapsed_ms = 0.0;
};

json to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);
json to_json(const Report& r);
/// Throws ParseError on schema violations.
Report report_from_json(const json& j);

/// Human-readable rendering.
std::string to_text(const Report& r);

json to_json(const DecompositionReport& r, bool with_samples);

VerdictKind verdict_kind_from_string(std::string_view s);
Reason reason_from_string(std::string_view s);

}  // namespace fiberalg::io
