#include "fiberalg/io.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fiberalg::io {

AnalyticOracle parse_function_at(const json& j, const std::string& path);

namespace {

std::string bare_message(const Error& e) {
  const std::string what = e.what();
  const auto pos = what.find(": ");
  return pos == std::string::npos ? what : what.substr(pos + 2);
}

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  fail(ErrorKind::ParseError, "at " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

mpq_class parse_real(const json& j, const std::string& path) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) parse_fail(path, "non-finite number");
    return mpq_class(x);
  }
  if (j.is_string()) {
    try {
      return GaussianRational::parse(j.get<std::string>()).real();
    } catch (const Error& e) {
      parse_fail(path, bare_message(e));
    }
  }
  parse_fail(path, "expected a number or a rational string");
}

GaussianRational parse_complex(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) parse_fail(path, "complex literal must be [re, im]");
    return {parse_real(j[0], path + "/0"), parse_real(j[1], path + "/1")};
  }
  return {parse_real(j, path)};
}

ExactPoly parse_coeffs(const json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array of coefficients");
  std::vector<GaussianRational> c;
  for (std::size_t k = 0; k < j.size(); ++k) c.push_back(parse_complex(j[k], path + "/" + std::to_string(k)));
  return ExactPoly(std::move(c));
}

std::vector<AnalyticOracle> parse_children(const json& j, const std::string& path, std::size_t min, std::size_t max) {
  const json& ch = field(j, "children", path);
  const std::string cp = path + "/children";
  if (!ch.is_array()) parse_fail(cp, "expected an array");
  if (ch.size() < min || ch.size() > max) {
    std::ostringstream os;
    os << "expected " << min;
    if (max != min) os << (max == SIZE_MAX ? " or more" : " to " + std::to_string(max));
    os << " children, got " << ch.size();
    parse_fail(cp, os.str());
  }
  std::vector<AnalyticOracle> out;
  for (std::size_t k = 0; k < ch.size(); ++k) out.push_back(parse_function_at(ch[k], cp + "/" + std::to_string(k)));
  return out;
}

BlaschkeProduct parse_blaschke(const json& j, const std::string& path) {
  const json& zs = field(j, "zeros", path);
  if (!zs.is_array() || zs.empty()) parse_fail(path + "/zeros", "expected a nonempty array");
  std::vector<cplx> zeros;
  for (std::size_t k = 0; k < zs.size(); ++k) zeros.push_back(parse_complex(zs[k], path + "/zeros/" + std::to_string(k)).to_complex());
  cplx c = 1.0;
  if (j.contains("unimodular")) c = parse_complex(j["unimodular"], path + "/unimodular").to_complex();
  try {
    return BlaschkeProduct(std::move(zeros), c);
  } catch (const Error& e) {
    fail(e.kind(), "at " + path + ": " + bare_message(e));
  }
}

std::string type_of(const json& j, const std::string& path) {
  const json& t = field(j, "type", path);
  if (!t.is_string()) parse_fail(path + "/type", "expected a string");
  return t.get<std::string>();
}

}  // namespace

AnalyticOracle parse_function_at(const json& j, const std::string& path) {
  const std::string type = type_of(j, path);
  AnalyticOracle out = [&]() -> AnalyticOracle {
    try {
      if (type == "poly") return AnalyticOracle::poly(parse_coeffs(field(j, "coeffs", path), path + "/coeffs"));
      if (type == "rational") {
        const ExactPoly den = parse_coeffs(field(j, "den", path), path + "/den");
        if (den.is_zero()) parse_fail(path + "/den", "zero denominator");
        return AnalyticOracle::rational(parse_coeffs(field(j, "num", path), path + "/num"), den);
      }
      if (type == "blaschke") return AnalyticOracle::blaschke(parse_blaschke(j, path));
      if (type == "sing_inner") {
        const cplx point = parse_complex(field(j, "point", path), path + "/point").to_complex();
        const double mass = parse_real(field(j, "mass", path), path + "/mass").get_d();
        return AnalyticOracle::singular_inner(point, mass);
      }
      if (type == "sum") return AnalyticOracle::sum(parse_children(j, path, 1, SIZE_MAX));
      if (type == "product") return AnalyticOracle::product(parse_children(j, path, 1, SIZE_MAX));
      if (type == "compose") {
        auto ch = parse_children(j, path, 2, 2);
        return AnalyticOracle::compose(ch[0], ch[1]);
      }
      if (type == "scale") {
        auto ch = parse_children(j, path, 1, 1);
        return AnalyticOracle::scale(parse_complex(field(j, "factor", path), path + "/factor"), ch[0]);
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError || std::string(e.what()).find(": at /") != std::string::npos) throw;
      fail(e.kind(), "at " + (path.empty() ? std::string("/") : path) + ": " + bare_message(e));
    }
    parse_fail(path + "/type", "unknown function type \"" + type + "\"");
  }();
  if (j.contains("boundary_continuous")) {
    const json& b = j["boundary_continuous"];
    if (!b.is_boolean()) parse_fail(path + "/boundary_continuous", "expected a boolean");
    out = out.with_boundary_continuous(b.get<bool>());
  }
  return out;
}

AnalyticOracle parse_function(const json& spec) {
  AnalyticOracle f = parse_function_at(spec, "");
  try {
    f.check_limits();
  } catch (const Error& e) {
    parse_fail("", bare_message(e));
  }
  return f;
}

AnalyticOracle parse_function_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return parse_function(j);
}

Generator parse_generator(const json& spec) {
  const std::string type = type_of(spec, "");
  if (type == "blaschke") return Generator(parse_blaschke(spec, ""));
  if (type == "poly") {
    const ExactPoly p = parse_coeffs(field(spec, "coeffs", ""), "/coeffs");
    if (p.degree() < 1) parse_fail("/coeffs", "generator polynomial must be nonconstant");
    return Generator(p);
  }
  parse_fail("/type", "generator must be \"blaschke\" or \"poly\", got \"" + type + "\"");
}

Generator parse_generator_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return parse_generator(j);
}

json number_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

json complex_json(const GaussianRational& z) { return json::array({number_json(z.real()), number_json(z.imag())}); }

json complex_json(cplx z) { return json::array({real_json(z.real()), real_json(z.imag())}); }

json real_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  fail(ErrorKind::ParseError, "expected a real number, got " + j.dump());
}

namespace {

json poly_json(const ExactPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(complex_json(c));
  if (a.empty()) a.push_back(json::array({0, 0}));
  return a;
}

json blaschke_json(const BlaschkeProduct& b) {
  json zs = json::array();
  for (cplx a : b.zeros()) zs.push_back(complex_json(a));
  return {{"type", "blaschke"}, {"zeros", zs}, {"unimodular", complex_json(b.unimodular())}};
}

}  // namespace

json to_json(const AnalyticOracle& f) {
  json j;
  switch (f.kind()) {
    case AnalyticOracle::Kind::Poly: j = {{"type", "poly"}, {"coeffs", poly_json(f.poly_coeffs())}}; break;
    case AnalyticOracle::Kind::Rational:
      j = {{"type", "rational"}, {"num", poly_json(f.rational_num())}, {"den", poly_json(f.rational_den())}};
      break;
    case AnalyticOracle::Kind::Blaschke: j = blaschke_json(f.blaschke_leaf()); break;
    case AnalyticOracle::Kind::SingularInner:
      j = {{"type", "sing_inner"}, {"point", complex_json(f.singular_point())}, {"mass", real_json(f.singular_mass())}};
      break;
    case AnalyticOracle::Kind::Sum:
    case AnalyticOracle::Kind::Product:
    case AnalyticOracle::Kind::Compose: {
      json ch = json::array();
      for (const auto& c : f.children()) ch.push_back(to_json(c));
      const char* name = f.kind() == AnalyticOracle::Kind::Sum       ? "sum"
                         : f.kind() == AnalyticOracle::Kind::Product ? "product"
                                                                     : "compose";
      j = {{"type", name}, {"children", ch}};
      break;
    }
    case AnalyticOracle::Kind::Scale:
      j = {{"type", "scale"}, {"factor", complex_json(f.scale_factor())}, {"children", json::array({to_json(f.children()[0])})}};
      break;
  }
  if (f.boundary_continuous()) j["boundary_continuous"] = true;
  return j;
}

json to_json(const Generator& b) {
  if (b.is_blaschke()) return blaschke_json(b.blaschke());
  return {{"type", "poly"}, {"coeffs", poly_json(b.exact_poly())}};
}

VerdictKind verdict_kind_from_string(std::string_view s) {
  for (auto k : {VerdictKind::Dense, VerdictKind::FiniteCodim, VerdictKind::InfiniteCodim, VerdictKind::GammaZero,
                 VerdictKind::Inconclusive})
    if (to_string(k) == s) return k;
  fail(ErrorKind::ParseError, "unknown verdict kind \"" + std::string(s) + "\"");
}

Reason reason_from_string(std::string_view s) {
  for (auto r : {Reason::ZeroFree, Reason::FiniteZeros, Reason::InfiniteZerosSuspected, Reason::SingularFactorSuspected,
                 Reason::IdenticallyZero, Reason::DefectUnstable})
    if (to_string(r) == s) return r;
  fail(ErrorKind::ParseError, "unknown reason \"" + std::string(s) + "\"");
}

namespace {

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::ParseError, "expected [re, im], got " + j.dump());
  return {real_from_json(j[0]), real_from_json(j[1])};
}

json roots_json(const std::vector<Root>& roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back({{"z", complex_json(r.value)}, {"multiplicity", r.multiplicity}});
  return a;
}

std::vector<Root> roots_from_json(const json& j) {
  std::vector<Root> out;
  for (const auto& r : j) out.push_back({complex_from_json(r.at("z")), r.at("multiplicity").get<int>()});
  return out;
}

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
std::optional<int> opt_int_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

json defect_json(const OuterDefect& d) {
  json rows = json::array();
  for (const auto& r : d.rows)
    rows.push_back({{"radius", real_json(r.radius)},
                    {"raw_defect", real_json(r.raw_defect)},
                    {"raw_points", r.raw_points},
                    {"raw_converged", r.raw_converged},
                    {"sampled", real_json(r.sampled)},
                    {"sampled_refined", real_json(r.sampled_refined)},
                    {"zero_mass", real_json(r.zero_mass)}});
  return {{"rows", rows},
          {"points", d.points},
          {"origin_multiplicity", d.origin_multiplicity},
          {"log_center", real_json(d.log_center)},
          {"raw_defect", real_json(d.raw_defect)},
          {"defect_after_zero_removal", real_json(d.defect_after_zero_removal)},
          {"defect_refined", real_json(d.defect_refined)},
          {"extrapolated", real_json(d.extrapolated)},
          {"zeros", roots_json(d.zeros)}};
}

OuterDefect defect_from_json(const json& j) {
  OuterDefect d;
  for (const auto& r : j.at("rows"))
    d.rows.push_back({real_from_json(r.at("radius")), real_from_json(r.at("raw_defect")), r.at("raw_points").get<int>(),
                      r.at("raw_converged").get<bool>(), real_from_json(r.at("sampled")),
                      real_from_json(r.at("sampled_refined")), real_from_json(r.at("zero_mass"))});
  d.points = j.at("points").get<int>();
  d.origin_multiplicity = j.at("origin_multiplicity").get<int>();
  d.log_center = real_from_json(j.at("log_center"));
  d.raw_defect = real_from_json(j.at("raw_defect"));
  d.defect_after_zero_removal = real_from_json(j.at("defect_after_zero_removal"));
  d.defect_refined = real_from_json(j.at("defect_refined"));
  d.extrapolated = real_from_json(j.at("extrapolated"));
  d.zeros = roots_from_json(j.at("zeros"));
  return d;
}

json structure_json(const VanishingStructure& s) {
  json samples = json::array();
  for (const auto& x : s.samples) {
    json pts = json::array();
    for (cplx p : x.points) pts.push_back(complex_json(p));
    samples.push_back({{"z", complex_json(x.z)}, {"points", pts}, {"blocks", x.blocks}});
  }
  return {{"block_size", s.block_size}, {"degree", s.degree}, {"samples", samples}};
}

VanishingStructure structure_from_json(const json& j) {
  VanishingStructure s;
  s.block_size = j.at("block_size").get<int>();
  s.degree = j.at("degree").get<int>();
  for (const auto& x : j.at("samples")) {
    VanishingStructure::Sample smp;
    smp.z = complex_from_json(x.at("z"));
    for (const auto& p : x.at("points")) smp.points.push_back(complex_from_json(p));
    smp.blocks = x.at("blocks").get<std::vector<std::vector<int>>>();
    s.samples.push_back(std::move(smp));
  }
  return s;
}

}  // namespace

json to_json(const Verdict& v) {
  json bz = json::array();
  for (cplx z : v.diagnostics.boundary_zeros) bz.push_back(complex_json(z));
  json diag = {{"path", v.diagnostics.path},
               {"zeros", roots_json(v.diagnostics.zeros)},
               {"boundary_zeros", bz},
               {"defect", v.diagnostics.defect ? defect_json(*v.diagnostics.defect) : json(nullptr)},
               {"identically_zero_max", real_json(v.diagnostics.identically_zero_max)},
               {"notes", v.diagnostics.notes}};
  return {{"kind", to_string(v.kind)},
          {"reason", to_string(v.reason)},
          {"codim_bound", opt_int(v.codim_bound)},
          {"exact_codim", opt_int(v.exact_codim)},
          {"diagnostics", diag},
          {"structure", v.structure ? structure_json(*v.structure) : json(nullptr)}};
}

Verdict verdict_from_json(const json& j) {
  try {
    Verdict v;
    v.kind = verdict_kind_from_string(j.at("kind").get<std::string>());
    v.reason = reason_from_string(j.at("reason").get<std::string>());
    v.codim_bound = opt_int_from(j.at("codim_bound"));
    v.exact_codim = opt_int_from(j.at("exact_codim"));
    const json& d = j.at("diagnostics");
    v.diagnostics.path = d.at("path").get<std::string>();
    v.diagnostics.zeros = roots_from_json(d.at("zeros"));
    for (const auto& z : d.at("boundary_zeros")) v.diagnostics.boundary_zeros.push_back(complex_from_json(z));
    if (!d.at("defect").is_null()) v.diagnostics.defect = defect_from_json(d.at("defect"));
    v.diagnostics.identically_zero_max = real_from_json(d.at("identically_zero_max"));
    v.diagnostics.notes = d.at("notes").get<std::vector<std::string>>();
    if (!j.at("structure").is_null()) v.structure = structure_from_json(j.at("structure"));
    return v;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed verdict: ") + e.what());
  }
}

json to_json(const Report& r) {
  return {{"schema_version", kReportSchemaVersion},
          {"command", r.command},
          {"space", r.space},
          {"generator", r.generator},
          {"g", r.g},
          {"verdict", to_json(r.verdict)},
          {"elapsed_ms", real_json(r.elapsed_ms)}};
}

Report report_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion)
      fail(ErrorKind::ParseError, "unsupported report schema version " + j.at("schema_version").dump());
    Report r;
    r.command = j.at("command").get<std::string>();
    r.space = j.at("space").get<std::string>();
    r.generator = j.at("generator");
    r.g = j.at("g");
    r.verdict = verdict_from_json(j.at("verdict"));
    r.elapsed_ms = real_from_json(j.at("elapsed_ms"));
    return r;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const Report& r) {
  const Verdict& v = r.verdict;
  std::ostringstream os;
  os.precision(10);
  os << "verdict: " << to_string(v.kind) << " (" << to_string(v.reason) << ")\n";
  os << "space: " << r.space << ", path: " << v.diagnostics.path << "\n";
  if (v.codim_bound) os << "codimension bound: " << *v.codim_bound << "\n";
  if (v.exact_codim) os << "exact codimension: " << *v.exact_codim << "\n";
  for (const auto& z : v.diagnostics.zeros) os << "zero: " << z.value << " x" << z.multiplicity << "\n";
  for (cplx z : v.diagnostics.boundary_zeros) os << "boundary zero: " << z << "\n";
  if (v.diagnostics.defect) {
    const OuterDefect& d = *v.diagnostics.defect;
    os << "defect after zero removal: " << d.defect_after_zero_removal << " (refined " << d.defect_refined
       << ", extrapolated " << d.extrapolated << ")\n";
    os << "radius,raw_defect,raw_points,sampled,sampled_refined,zero_mass\n";
    for (const auto& row : d.rows)
      os << row.radius << "," << row.raw_defect << "," << row.raw_points << "," << row.sampled << ","
         << row.sampled_refined << "," << row.zero_mass << "\n";
  }
  if (v.structure) os << "vanishing structure: blocks of size " << v.structure->block_size << "\n";
  for (const auto& n : v.diagnostics.notes) os << "note: " << n << "\n";
  os << "elapsed: " << r.elapsed_ms << " ms\n";
  return os.str();
}

json to_json(const DecompositionReport& r, bool with_samples) {
  json j = {{"max_residual", real_json(r.max_residual)},
            {"mean_residual", real_json(r.mean_residual)},
            {"evaluated", r.evaluated},
            {"skipped", r.skipped},
            {"near_degenerate", r.near_degenerate},
            {"max_coeff", real_json(r.max_coeff)}};
  if (with_samples) {
    json s = json::array();
    for (const auto& x : r.samples) {
      json c = json::array();
      for (cplx a : x.coeffs) c.push_back(complex_json(a));
      s.push_back({{"z", complex_json(x.z)}, {"coeffs", c}, {"residual", real_json(x.residual)}});
    }
    j["samples"] = s;
  }
  return j;
}

}  // namespace fiberalg::io
