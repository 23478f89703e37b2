#include "fiberalg/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "fiberalg/parallel.hpp"

namespace fiberalg {
namespace {

cplx horner(const std::vector<cplx>& c, cplx x) {
  cplx acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double min_pairwise(const std::vector<cplx>& v) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::min(best, std::abs(v[i] - v[j]));
  return best;
}

std::vector<cplx> without(const std::vector<cplx>& v, std::size_t skip) {
  std::vector<cplx> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != skip) out.push_back(v[i]);
  return out;
}

std::vector<cplx> regular_fiber(const Generator& gen, cplx z, double separation) {
  const Fiber f = gen.fiber(z);
  if (min_pairwise(f.points) < separation)
    fail(ErrorKind::NearCriticalPoint, "fiber points closer than the critical separation; perturb z");
  return f.points;
}

std::vector<cplx> eval_all(const AnalyticOracle& h, const std::vector<cplx>& pts) {
  std::vector<cplx> out;
  out.reserve(pts.size());
  for (cplx p : pts) out.push_back(h.eval(p));
  return out;
}

// Multiplicity of the root a of the squarefree factor s inside p.
int order_at(ExactPoly p, cplx a, const ExactPoly& s) {
  if (p.is_zero()) return kInfiniteOrder;
  double sep = std::numeric_limits<double>::infinity();
  for (cplx r : poly_root_values(to_float(s)))
    if (std::abs(r - a) > 1e-12) sep = std::min(sep, std::abs(r - a));
  int order = 0;
  for (;;) {
    const ExactPoly common = poly_gcd(p, s);
    if (common.degree() < 1) return order;
    bool has = false;
    for (cplx r : poly_root_values(to_float(common))) has = has || std::abs(r - a) < 0.5 * sep;
    if (!has) return order;
    ++order;
    p = exact_div(p, common);
  }
}

}  // namespace

std::vector<cplx> expand_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{cplx(1)};
  for (cplx r : roots) {
    c.push_back(cplx(0));
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] *= -r;
  }
  return c;
}

DecompositionSample lagrange_coeffs(const GammaFunction& gamma, const AnalyticOracle& f, cplx z,
                                    const DecomposeSettings& settings) {
  const std::vector<cplx> pts = regular_fiber(gamma.generator(), z, settings.critical_separation);
  const std::size_t n = pts.size();
  const std::vector<cplx> gv = eval_all(gamma.g(), pts);
  const std::vector<cplx> fv = eval_all(f, pts);
  DecompositionSample s;
  s.z = z;
  s.coeffs.assign(n, cplx(0));
  s.g_separation = min_pairwise(gv);
  for (std::size_t j = 0; j < n; ++j) {
    cplx denom(1);
    for (std::size_t l = 0; l < n; ++l)
      if (l != j) denom *= pts[j] - pts[l];
    const cplx w = fv[j] / denom;
    const std::vector<cplx> basis = expand_roots(without(gv, j));
    for (std::size_t k = 0; k < n; ++k) s.coeffs[k] += w * basis[k];
  }
  s.residual = std::abs(fv[0] * gamma.eval(z) - horner(s.coeffs, gv[0]));
  return s;
}

DecompositionSample lagrange_coeffs(const Generator& b, const AnalyticOracle& g, const AnalyticOracle& f, cplx z) {
  return lagrange_coeffs(GammaFunction(b, g), f, z);
}

std::vector<cplx> raw_lagrange_coeffs(const GammaFunction& gamma, const AnalyticOracle& f, cplx z,
                                      const DecomposeSettings& settings) {
  const std::vector<cplx> pts = regular_fiber(gamma.generator(), z, settings.critical_separation);
  const std::size_t n = pts.size();
  const std::vector<cplx> gv = eval_all(gamma.g(), pts);
  if (min_pairwise(gv) < settings.collapse_separation)
    fail(ErrorKind::NearDegenerate, "g takes nearly equal values on the fiber");
  std::vector<cplx> c(n, cplx(0));
  for (std::size_t j = 0; j < n; ++j) {
    cplx denom(1);
    for (std::size_t l = 0; l < n; ++l)
      if (l != j) denom *= gv[j] - gv[l];
    const cplx w = f.eval(pts[j]) * gamma.eval(pts[j]) / denom;
    const std::vector<cplx> basis = expand_roots(without(gv, j));
    for (std::size_t k = 0; k < n; ++k) c[k] += w * basis[k];
  }
  return c;
}

DecompositionReport verify_decomposition(const GammaFunction& gamma, const AnalyticOracle& f,
                                         const std::vector<cplx>& grid, const DecomposeSettings& settings) {
  auto results = parallel_map<std::optional<DecompositionSample>>(
      grid.size(), settings.threads, [&](std::size_t i) -> std::optional<DecompositionSample> {
        try {
          return lagrange_coeffs(gamma, f, grid[i], settings);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NearCriticalPoint) throw;
          return std::nullopt;
        }
      });
  DecompositionReport r;
  double sum = 0.0;
  for (auto& s : results) {
    if (!s) {
      ++r.skipped;
      continue;
    }
    ++r.evaluated;
    if (s->g_separation < settings.collapse_separation) ++r.near_degenerate;
    r.max_residual = std::max(r.max_residual, s->residual);
    sum += s->residual;
    for (cplx a : s->coeffs) r.max_coeff = std::max(r.max_coeff, std::abs(a));
    r.samples.push_back(std::move(*s));
  }
  if (r.evaluated > 0) r.mean_residual = sum / r.evaluated;
  return r;
}

double fiber_constancy(const GammaFunction& gamma, const AnalyticOracle& f, cplx z, const DecomposeSettings& settings) {
  const DecompositionSample base = lagrange_coeffs(gamma, f, z, settings);
  double dev = 0.0;
  for (cplx p : gamma.generator().fiber(z).others()) {
    const DecompositionSample other = lagrange_coeffs(gamma, f, p, settings);
    for (std::size_t k = 0; k < base.coeffs.size(); ++k) dev = std::max(dev, std::abs(other.coeffs[k] - base.coeffs[k]));
  }
  return dev;
}

std::vector<cplx> polar_grid(int rings, int spokes, double radius) {
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(rings) * spokes);
  for (int i = 0; i < rings; ++i) {
    const double r = radius * (i + 0.5) / rings;
    for (int k = 0; k < spokes; ++k) {
      const double t = 2.0 * std::numbers::pi * (k + 0.5 + 0.37 * i) / spokes;
      out.push_back(std::polar(r, t));
    }
  }
  return out;
}

cplx involution(const Generator& b, cplx z) {
  if (b.degree() != 2) fail(ErrorKind::DegreeNotTwo, "the involution needs a generator of degree 2");
  return b.fiber(z).points[1];
}

Degree2Split degree2_split(const std::function<cplx(cplx)>& f, const Generator& b, const std::vector<cplx>& grid) {
  if (b.degree() != 2) fail(ErrorKind::DegreeNotTwo, "degree-2 split needs a generator of degree 2");
  Degree2Split s;
  for (cplx z : grid) {
    const cplx p = involution(b, z);
    const cplx fz = f(z), fp = f(p);
    s.points.push_back(z);
    s.partner.push_back(p);
    s.f.push_back(fz);
    s.pi1.push_back(0.5 * (fz + fp));
    s.pi2.push_back(0.5 * (fz - fp));
  }
  return s;
}

Degree2Split degree2_split(const AnalyticOracle& f, const Generator& b, const std::vector<cplx>& grid) {
  return degree2_split([&f](cplx z) { return f.eval(z); }, b, grid);
}

ExactRational exact_involution(const Generator& b) {
  if (b.degree() != 2) fail(ErrorKind::DegreeNotTwo, "the involution needs a generator of degree 2");
  const ExactBivariate k = divide_by_t_minus_z(fiber_relation(b));
  if (k.degree_t() != 1) fail(ErrorKind::DegreeNotTwo, "fiber relation is not linear in t");
  return ExactRational(-k.coeff(0), k.coeff(1));
}

MembershipCertificate degree2_membership(const Generator& b, const AnalyticOracle& g, const AnalyticOracle& f) {
  if (b.degree() != 2) fail(ErrorKind::DegreeNotTwo, "membership test needs a generator of degree 2");
  const ExactRational fr = f.to_exact_rational();
  const ExactRational gr = g.to_exact_rational();
  for (auto* r : {&fr, &gr}) {
    if (r->den().degree() < 1) continue;
    for (cplx p : poly_root_values(to_float(r->den())))
      if (std::abs(p) <= 1.0 + 1e-12) fail(ErrorKind::InvalidInput, "rational function with a pole in the closed disk");
  }
  const ExactRational gamma = gamma_exact(b, g);
  MembershipCertificate cert;
  cert.pi2 = (fr - compose(fr, exact_involution(b))) * ExactRational(ExactPoly::constant(GaussianRational(mpq_class(1, 2))));
  if (gamma.is_zero()) {
    cert.member = cert.pi2.is_zero();
    return cert;
  }
  if (gamma.num().degree() >= 1) {
    const auto factors = squarefree_decomposition(gamma.num());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() < 1) continue;
      for (cplx a : poly_root_values(to_float(factors[i]))) {
        if (std::abs(a) >= 1.0 - 1e-9) continue;
        MembershipZero z{a, static_cast<int>(i) + 1, kInfiniteOrder};
        if (!cert.pi2.is_zero()) z.attained = order_at(cert.pi2.num(), a, factors[i]) - order_at(cert.pi2.den(), a, factors[i]);
        cert.zeros.push_back(z);
      }
    }
  }
  cert.member = std::all_of(cert.zeros.begin(), cert.zeros.end(), [](const MembershipZero& z) { return z.attained >= z.required; });
  return cert;
}

}  // namespace fiberalg
