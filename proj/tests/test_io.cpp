#include <gtest/gtest.h>

#include <random>

#include "fiberalg/io.hpp"
#include "support.hpp"

using namespace fiberalg;
using namespace fiberalg::testing;
using fiberalg::io::json;

namespace {

ErrorKind parse_error_kind(const std::string& text, std::string* message = nullptr) {
  try {
    io::parse_function_text(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorKind::InvalidInput;
}

const char* kTree = R"({"type":"sum","children":[
  {"type":"poly","coeffs":[[1,0],["1/2","-3/4"],0.25]},
  {"type":"product","children":[{"type":"poly","coeffs":[0,1]},{"type":"sing_inner","point":[1,0],"mass":"1/2"}]},
  {"type":"scale","factor":[0,2],"children":[{"type":"blaschke","zeros":[[0,0],[0.5,0]],"unimodular":[-1,0]}]},
  {"type":"compose","children":[{"type":"rational","num":[1],"den":[3,-1]},{"type":"poly","coeffs":[0,0,1]}]}]})";

}  // namespace

TEST(FunctionSpec, ParsesTree) {
  const AnalyticOracle f = io::parse_function_text(kTree);
  std::mt19937 rng(71);
  for (int k = 0; k < 20; ++k) {
    const cplx z = random_disk_point(rng);
    const cplx expect = 1.0 + cplx(0.5, -0.75) * z + 0.25 * z * z + z * std::exp(0.5 * (z + 1.0) / (z - 1.0)) +
                        cplx(0, 2) * (-(z * (0.5 - z) / (1.0 - 0.5 * z))) * -1.0 + 1.0 / (3.0 - z * z);
    EXPECT_LT(std::abs(f.eval(z) - expect), 1e-13);
  }
}

TEST(FunctionSpec, ExactLiterals) {
  const AnalyticOracle f = io::parse_function_text(R"({"type":"poly","coeffs":["1/3",["0.1","-2"]]})");
  EXPECT_EQ(f.poly_coeffs().coeff(0), q(1, 3));
  EXPECT_EQ(f.poly_coeffs().coeff(1), GaussianRational(mpq_class(1, 10), mpq_class(-2)));
}

TEST(FunctionSpec, RoundTrip) {
  const AnalyticOracle f = io::parse_function_text(kTree);
  const json j = io::to_json(f);
  const AnalyticOracle g = io::parse_function(j);
  EXPECT_EQ(io::to_json(g), j);
  for (cplx z : {cplx(0.1, 0.2), cplx(-0.7, 0.3)}) EXPECT_EQ(f.eval(z), g.eval(z));
  const AnalyticOracle bc = io::parse_function_text(R"({"type":"sing_inner","point":[1,0],"mass":1,"boundary_continuous":true})");
  EXPECT_TRUE(bc.boundary_continuous());
  EXPECT_TRUE(io::parse_function(io::to_json(bc)).boundary_continuous());
}

TEST(FunctionSpec, ErrorsCarryPaths) {
  std::string msg;
  EXPECT_EQ(parse_error_kind(R"({"type":"sum","children":[{"type":"poly","coeffs":[[1,"x"]]}]})", &msg), ErrorKind::ParseError);
  EXPECT_NE(msg.find("/children/0/coeffs/0/1"), std::string::npos) << msg;
  EXPECT_EQ(parse_error_kind(R"({"type":"wavelet"})", &msg), ErrorKind::ParseError);
  EXPECT_NE(msg.find("/type"), std::string::npos) << msg;
  EXPECT_EQ(parse_error_kind(R"({"type":"poly"})", &msg), ErrorKind::ParseError);
  EXPECT_NE(msg.find("coeffs"), std::string::npos) << msg;
  EXPECT_EQ(parse_error_kind(R"({"type":"compose","children":[{"type":"poly","coeffs":[1]}]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(R"({"type":"poly","coeffs":[1,)"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("[1,2]"), ErrorKind::ParseError);
}

TEST(FunctionSpec, DomainErrorsKeepKind) {
  std::string msg;
  const ErrorKind k = parse_error_kind(R"({"type":"product","children":[{"type":"blaschke","zeros":[[0,0],[1.5,0]]}]})", &msg);
  EXPECT_NE(k, ErrorKind::ParseError);
  EXPECT_NE(msg.find("/children/0"), std::string::npos) << msg;
  EXPECT_NE(parse_error_kind(R"({"type":"sing_inner","point":[0.5,0],"mass":1})"), ErrorKind::ParseError);
}

TEST(GeneratorSpec, BlaschkeAndPolynomial) {
  const Generator b = io::parse_generator_text(R"({"type":"blaschke","zeros":[[0,0],[0,0],[0,0]]})");
  EXPECT_TRUE(b.is_blaschke());
  EXPECT_LT(std::abs(b.eval(0.5) + 0.125), 1e-15);  // unimodular defaults to 1: (0 - z)^3
  const Generator p = io::parse_generator_text(R"({"type":"poly","coeffs":[0,"-1/2",1]})");
  EXPECT_FALSE(p.is_blaschke());
  EXPECT_EQ(p.exact_poly(), (ExactPoly{q(0), q(-1, 2), q(1)}));
  EXPECT_EQ(io::parse_generator(io::to_json(p)).exact_poly(), p.exact_poly());
  EXPECT_THROW(io::parse_generator_text(R"({"type":"sing_inner","point":[1,0],"mass":1})"), Error);
}

TEST(Numbers, Encoding) {
  EXPECT_EQ(io::number_json(mpq_class(3)), json(3));
  EXPECT_EQ(io::number_json(mpq_class(-1, 2)), json("-1/2"));
  EXPECT_EQ(io::real_json(std::numeric_limits<double>::infinity()), json("inf"));
  EXPECT_EQ(io::real_from_json(json("-inf")), -std::numeric_limits<double>::infinity());
  EXPECT_TRUE(std::isnan(io::real_from_json(io::real_json(std::nan("")))));
  EXPECT_EQ(io::real_from_json(io::real_json(0.1)), 0.1);
}

TEST(Report, RoundTripOverCorpus) {
  auto all = rational_corpus();
  for (auto& e : oracle_corpus()) all.push_back(e);
  for (const auto& e : all) {
    io::Report r;
    r.generator = io::to_json(e.b);
    r.g = io::to_json(e.g);
    r.verdict = classify(e.b, e.g);
    r.elapsed_ms = 12.5;
    const json j = io::to_json(r);
    EXPECT_EQ(j.at("schema_version"), io::kReportSchemaVersion);
    const json back = io::to_json(io::report_from_json(json::parse(j.dump())));
    EXPECT_EQ(back, j) << e.name;
    EXPECT_NE(io::to_text(r).find(to_string(r.verdict.kind)), std::string::npos);
  }
}

TEST(Report, DiskAlgebraRoundTrip) {
  io::Report r;
  r.space = "disk-algebra";
  r.generator = io::to_json(zgen(2));
  r.g = io::to_json(opoly({q(0), q(1), q(0), q(1)}));
  r.verdict = disk_algebra_classify(zgen(2), opoly({q(0), q(1), q(0), q(1)}));
  const json j = io::to_json(r);
  EXPECT_EQ(io::to_json(io::report_from_json(j)), j);
}

TEST(Report, MalformedRejected) {
  io::Report r;
  r.generator = io::to_json(zgen(2));
  r.g = io::to_json(zpow(3));
  r.verdict = classify(zgen(2), zpow(3));
  json j = io::to_json(r);
  j["verdict"]["kind"] = "Sparse";
  try {
    io::report_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
  json k = io::to_json(r);
  k.erase("verdict");
  EXPECT_THROW(io::report_from_json(k), Error);
}

TEST(Report, EnumNames) {
  for (VerdictKind v : {VerdictKind::Dense, VerdictKind::FiniteCodim, VerdictKind::InfiniteCodim, VerdictKind::GammaZero,
                        VerdictKind::Inconclusive})
    EXPECT_EQ(io::verdict_kind_from_string(to_string(v)), v);
  for (Reason r : {Reason::ZeroFree, Reason::FiniteZeros, Reason::InfiniteZerosSuspected, Reason::SingularFactorSuspected,
                   Reason::IdenticallyZero, Reason::DefectUnstable})
    EXPECT_EQ(io::reason_from_string(to_string(r)), r);
}

TEST(DecompositionJson, Fields) {
  const GammaFunction gamma(zgen(3), zpow(2));
  const DecompositionReport r = verify_decomposition(gamma, zpow(1), polar_grid(2, 4, 0.8));
  const json j = io::to_json(r, true);
  EXPECT_EQ(j.at("evaluated"), 8);
  EXPECT_EQ(j.at("samples").size(), 8u);
  EXPECT_FALSE(io::to_json(r, false).contains("samples"));
}
