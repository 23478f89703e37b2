// Command-line front end. Exit codes: 0 ok, 2 parse error, 3 domain error,
// 4 not rational, 5 inconclusive.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fiberalg/io.hpp"

using namespace fiberalg;
using io::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNotRational = 4;
constexpr int kExitInconclusive = 5;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kExitParse;
    case ErrorKind::NotRational: return kExitNotRational;
    case ErrorKind::Inconclusive:
    case ErrorKind::NearDegenerate:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::NearCircleZero:
    case ErrorKind::BoundaryResolutionExceeded:
    case ErrorKind::StructureNotFound:
    case ErrorKind::EvaluationFailure:
    case ErrorKind::ZeroAtOrigin: return kExitInconclusive;
    default: return kExitDomain;
  }
}

// Inline JSON, or @path to read it from a file.
std::string spec_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) fail(ErrorKind::ParseError, "cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, std::string("bad number in ") + what + ": '" + part + "'");
    }
  }
  return out;
}

cplx parse_point(const std::string& s) {
  const auto v = parse_list(s, "--z");
  if (v.size() != 2) fail(ErrorKind::ParseError, "--z expects RE,IM");
  return {v[0], v[1]};
}

int threads_from_env() {
  const char* t = std::getenv("THREADS");
  if (!t) return 1;
  const int n = std::atoi(t);
  return n > 0 ? n : 1;
}

void print_complex(std::ostream& os, cplx z) { os << z.real() << "," << z.imag(); }

void write_json(const json& j, const std::string& target) {
  if (target.empty() || target == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(target);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write " + target);
  out << j.dump(2) << "\n";
}

json poly_coeff_json(const ExactPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(io::complex_json(c));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiber-algebra analysis: closures of C[B, g] through the fiber discriminant Gamma"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fiberalg 1.0");

  std::string b_spec, g_spec, f_spec, z_arg, space = "h2", json_out, radii_arg;
  int grid = 0, decompose_grid = 8, n = 0, m = 0, samples = 8, max_zeros = 64, dump = 0;
  double radius = 0.9, tol = 1e-10, structure_tol = 1e-8, defect_threshold = 0.05, zero_radius = 0.999;
  bool exact = false, oracle_only = false;

  auto* fiber_cmd = app.add_subcommand("fiber", "Fiber of B through z");
  fiber_cmd->add_option("--b", b_spec, "generator spec (JSON or @file)")->required();
  fiber_cmd->add_option("--z", z_arg, "base point RE,IM")->required();

  auto* gamma_cmd = app.add_subcommand("gamma", "Evaluate Gamma(g) at a point or on a polar grid");
  gamma_cmd->add_option("--b", b_spec, "generator spec")->required();
  gamma_cmd->add_option("--g", g_spec, "function spec")->required();
  gamma_cmd->add_option("--z", z_arg, "point RE,IM");
  gamma_cmd->add_option("--grid", grid, "N for an N x N polar grid (CSV output)");
  gamma_cmd->add_option("--radius", radius, "grid radius");
  gamma_cmd->add_flag("--exact", exact, "also print the exact rational form");

  auto* zeros_cmd = app.add_subcommand("zeros", "Zeros of Gamma(g) in the disk");
  zeros_cmd->add_option("--b", b_spec, "generator spec")->required();
  zeros_cmd->add_option("--g", g_spec, "function spec")->required();
  zeros_cmd->add_option("--radius", zero_radius, "search radius");
  zeros_cmd->add_option("--max-zeros", max_zeros, "zero budget");
  zeros_cmd->add_flag("--oracle", oracle_only, "skip the exact rational path");

  auto* classify_cmd = app.add_subcommand("classify", "Classify the closure of C[B, g]");
  classify_cmd->add_option("--b", b_spec, "generator spec")->required();
  classify_cmd->add_option("--g", g_spec, "function spec")->required();
  classify_cmd->add_option("--space", space, "h2 or disk-algebra")->check(CLI::IsMember({"h2", "disk-algebra"}));
  classify_cmd->add_option("--json", json_out, "write the JSON report to this file ('-' for stdout)");
  classify_cmd->add_option("--tol", tol, "tolerance for Gamma vanishing identically");
  classify_cmd->add_option("--defect-threshold", defect_threshold, "outer-defect decision threshold");
  classify_cmd->add_option("--max-zeros", max_zeros, "zero budget");
  classify_cmd->add_option("--radii", radii_arg, "defect radii, comma separated");
  classify_cmd->add_flag("--oracle", oracle_only, "skip the exact rational path");

  auto* decompose_cmd = app.add_subcommand("decompose", "Check f Gamma(g) = sum A_k g^k on a grid");
  decompose_cmd->add_option("--b", b_spec, "generator spec")->required();
  decompose_cmd->add_option("--g", g_spec, "function spec")->required();
  decompose_cmd->add_option("--f", f_spec, "function spec")->required();
  decompose_cmd->add_option("--grid", decompose_grid, "N for an N x N polar grid");
  decompose_cmd->add_option("--radius", radius, "grid radius");
  decompose_cmd->add_flag("--dump", dump, "include per-sample coefficients");

  auto* structure_cmd = app.add_subcommand("structure", "Block structure of the fibers when Gamma(g) = 0");
  structure_cmd->add_option("--b", b_spec, "generator spec")->required();
  structure_cmd->add_option("--g", g_spec, "function spec")->required();
  structure_cmd->add_option("--samples", samples, "number of sample points");
  structure_cmd->add_option("--tol", structure_tol, "coincidence tolerance");

  auto* monomial_cmd = app.add_subcommand("monomial", "Order of Gamma and codimension for B = z^n, g = z^m");
  monomial_cmd->add_option("--n", n, "degree of B")->required();
  monomial_cmd->add_option("--m", m, "exponent of g")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  const int threads = threads_from_env();
  std::cout.precision(17);
  try {
    if (*fiber_cmd) {
      const Generator b = io::parse_generator_text(spec_text(b_spec));
      const Fiber f = b.fiber(parse_point(z_arg));
      for (cplx p : f.points) {
        print_complex(std::cout, p);
        std::cout << "\n";
      }
      std::cout << "residual " << f.residual << "\n";
      return 0;
    }

    if (*gamma_cmd) {
      const Generator b = io::parse_generator_text(spec_text(b_spec));
      const AnalyticOracle g = io::parse_function_text(spec_text(g_spec));
      if (exact) {
        const ExactRational r = gamma_exact(b, g);
        std::cout << json{{"num", poly_coeff_json(r.num())}, {"den", poly_coeff_json(r.den())}}.dump() << "\n";
      }
      const GammaFunction gamma(b, g);
      if (grid > 0) {
        std::cout << "re,im,gamma_re,gamma_im,abs,arg\n";
        for (cplx z : polar_grid(grid, grid, radius)) {
          const cplx v = gamma.eval(z);
          std::cout << z.real() << "," << z.imag() << "," << v.real() << "," << v.imag() << "," << std::abs(v) << ","
                    << std::arg(v) << "\n";
        }
      } else if (!z_arg.empty()) {
        print_complex(std::cout, gamma.eval(parse_point(z_arg)));
        std::cout << "\n";
      } else if (!exact) {
        fail(ErrorKind::ParseError, "gamma needs --z, --grid or --exact");
      }
      return 0;
    }

    if (*zeros_cmd) {
      const Generator b = io::parse_generator_text(spec_text(b_spec));
      const AnalyticOracle g = io::parse_function_text(spec_text(g_spec));
      GammaSettings gs;
      gs.compute_exact = !oracle_only;
      const GammaFunction gamma(b, g, gs);
      for (const auto& r : find_zeros(gamma, zero_radius, max_zeros)) {
        print_complex(std::cout, r.value);
        std::cout << "," << r.multiplicity << "\n";
      }
      return 0;
    }

    if (*classify_cmd) {
      const auto t0 = std::chrono::steady_clock::now();
      const Generator b = io::parse_generator_text(spec_text(b_spec));
      const AnalyticOracle g = io::parse_function_text(spec_text(g_spec));
      ClassifySettings s;
      s.identically_zero_tolerance = tol;
      s.defect_threshold = defect_threshold;
      s.max_zeros = max_zeros;
      s.prefer_exact = !oracle_only;
      s.threads = threads;
      if (!radii_arg.empty()) s.radii = parse_list(radii_arg, "--radii");
      io::Report report;
      report.space = space;
      report.generator = io::to_json(b);
      report.g = io::to_json(g);
      report.verdict = space == "h2" ? classify(b, g, s) : disk_algebra_classify(b, g, s);
      report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (!json_out.empty()) write_json(io::to_json(report), json_out);
      if (json_out != "-") std::cout << io::to_text(report);
      return report.verdict.kind == VerdictKind::Inconclusive ? kExitInconclusive : 0;
    }

    if (*decompose_cmd) {
      const Generator b = io::parse_generator_text(spec_text(b_spec));
      const AnalyticOracle g = io::parse_function_text(spec_text(g_spec));
      const AnalyticOracle f = io::parse_function_text(spec_text(f_spec));
      const GammaFunction gamma(b, g);
      DecomposeSettings ds;
      ds.threads = threads;
      const auto pts = polar_grid(decompose_grid, decompose_grid, radius);
      const DecompositionReport r = verify_decomposition(gamma, f, pts, ds);
      json out = io::to_json(r, dump != 0);
      double constancy = 0.0;
      int checked = 0;
      for (const auto& s : r.samples) {
        if (checked == 16) break;
        try {
          constancy = std::max(constancy, fiber_constancy(gamma, f, s.z, ds));
          ++checked;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NearCriticalPoint) throw;
        }
      }
      out["fiber_constancy"] = io::real_json(constancy);
      out["fiber_constancy_points"] = checked;
      std::cout << out.dump(2) << "\n";
      if (r.evaluated == 0) fail(ErrorKind::Inconclusive, "every grid point lies near a critical fiber");
      if (r.near_degenerate == r.evaluated) {
        std::cerr << "NearDegenerate: g takes equal values on every sampled fiber\n";
        return kExitInconclusive;
      }
      return 0;
    }

    if (*structure_cmd) {
      const Generator b = io::parse_generator_text(spec_text(b_spec));
      const AnalyticOracle g = io::parse_function_text(spec_text(g_spec));
      const VanishingStructure vs = vanishing_structure(b, g, structure_samples(b, samples), structure_tol);
      std::cout << "block_size " << vs.block_size << "\n";
      for (const auto& s : vs.samples) {
        std::cout << "at ";
        print_complex(std::cout, s.z);
        std::cout << ":";
        for (const auto& blk : s.blocks) {
          std::cout << " {";
          for (std::size_t k = 0; k < blk.size(); ++k) std::cout << (k ? " " : "") << blk[k];
          std::cout << "}";
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (*monomial_cmd) {
      const MonomialCodim mc = monomial_codim(n, m);
      std::cout << "order " << mc.order << "\ncodim " << mc.codim << "\ngaps " << mc.gaps << "\nconductor " << mc.conductor
                << "\n";
      // No closed form for the constant; sample Gamma(z) / z^order on a circle.
      const GammaFunction gamma(Generator(BlaschkeProduct::power(n)), AnalyticOracle::poly(ExactPoly::monomial(GaussianRational(1), m)));
      cplx c(0);
      for (int k = 0; k < 8; ++k) {
        const cplx z = std::polar(0.5, 2.0 * std::numbers::pi * k / 8);
        c += gamma.eval(z) / std::pow(z, mc.order);
      }
      std::cout << "constant ";
      print_complex(std::cout, c / 8.0);
      std::cout << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
