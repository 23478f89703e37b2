#include "fiberalg/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fiberalg {
namespace {

constexpr double kPi = std::numbers::pi;

double halton(int index, int base) {
  double f = 1.0, r = 0.0;
  for (int i = index; i > 0; i /= base) {
    f /= base;
    r += f * (i % base);
  }
  return r;
}

cplx disk_point(int index, double radius) {
  return std::polar(radius * std::sqrt(halton(index, 2)), 2.0 * kPi * halton(index, 3));
}

void require_classifiable(const Generator& gen, const AnalyticOracle& g) {
  if (gen.degree() < 2) fail(ErrorKind::InvalidInput, "classification needs a generator of degree at least 2");
  if (!gen.is_blaschke() && !g.is_rational())
    fail(ErrorKind::InvalidInput, "a polynomial generator is only paired with rational functions");
}

void require_bounded(const ExactRational& r) {
  if (r.den().degree() < 1) return;
  for (const auto& p : poly_roots(r.den()).roots)
    if (std::abs(p.value) <= 1.0 + 1e-12)
      fail(ErrorKind::InvalidInput, "g has a pole in the closed unit disk and is not bounded there");
}

double vanishing_probe(const GammaFunction& gamma, const ClassifySettings& s) {
  double worst = 0.0;
  for (int i = 1; i <= s.identically_zero_points; ++i) worst = std::max(worst, std::abs(gamma.eval(disk_point(i, 0.95))));
  return worst;
}

int total_multiplicity(const std::vector<Root>& zeros) {
  int n = 0;
  for (const auto& z : zeros) n += z.multiplicity;
  return n;
}

// exact_codim for B = z^n (any unimodular constant) and g = c z^m.
std::optional<int> monomial_exact_codim(const Generator& gen, const ExactRational& g) {
  if (!gen.is_blaschke()) return std::nullopt;
  const auto& zs = gen.blaschke().zeros();
  if (!std::all_of(zs.begin(), zs.end(), [](cplx a) { return a == cplx(0.0); })) return std::nullopt;
  if (g.den().degree() != 0 || g.num().degree() < 1) return std::nullopt;
  const int m = g.num().degree();
  for (int k = 0; k < m; ++k)
    if (!g.num().coeff(static_cast<std::size_t>(k)).is_zero()) return std::nullopt;
  if (m == 1) return 0;
  if (std::gcd(gen.degree(), m) != 1) return std::nullopt;
  return monomial_codim(gen.degree(), m).codim;
}

GammaFunction build_gamma(const Generator& gen, const AnalyticOracle& g, const ClassifySettings& s, bool& exact) {
  GammaSettings gs = s.gamma;
  exact = s.prefer_exact && g.is_rational();
  gs.compute_exact = exact;
  if (g.is_rational()) require_bounded(g.to_exact_rational());
  return GammaFunction(gen, g, gs);
}

bool identically_zero(const GammaFunction& gamma, bool exact, const ClassifySettings& s, Verdict& v) {
  if (exact) return gamma.exact()->is_zero();
  v.diagnostics.identically_zero_max = vanishing_probe(gamma, s);
  return v.diagnostics.identically_zero_max < s.identically_zero_tolerance;
}

void mark_gamma_zero(const Generator& gen, const AnalyticOracle& g, const ClassifySettings& s, Verdict& v) {
  v.kind = VerdictKind::GammaZero;
  v.reason = Reason::IdenticallyZero;
  try {
    v.structure = vanishing_structure(gen, g, structure_samples(gen), s.structure_tolerance);
  } catch (const Error& e) {
    v.diagnostics.notes.push_back(std::string("vanishing structure not recovered: ") + e.what());
  }
}

void split_exact_zeros(const ExactRational& gamma, double tol, std::vector<Root>& inside, std::vector<cplx>& boundary) {
  if (gamma.num().degree() < 1) return;
  for (const auto& r : poly_roots(gamma.num()).roots) {
    const double m = std::abs(r.value);
    if (std::abs(m - 1.0) <= tol) boundary.push_back(r.value);
    else if (m < 1.0) inside.push_back(r);
  }
  std::sort(inside.begin(), inside.end(), [](const Root& a, const Root& b) { return std::abs(a.value) < std::abs(b.value); });
}

// Decide the singular-factor question from the defect table.
void apply_defect(Verdict& v, const OuterDefect& d, const ClassifySettings& s) {
  const bool singular = d.defect_after_zero_removal > s.defect_threshold;
  const bool refined = d.defect_refined > s.defect_threshold;
  if (singular != refined) {
    v.kind = VerdictKind::Inconclusive;
    v.reason = Reason::DefectUnstable;
    std::ostringstream os;
    os << "defect " << d.defect_after_zero_removal << " on " << d.points << " points but " << d.defect_refined << " on "
       << 2 * d.points << " points";
    v.diagnostics.notes.push_back(os.str());
  } else if (singular) {
    v.kind = VerdictKind::InfiniteCodim;
    v.reason = Reason::SingularFactorSuspected;
  }
}

std::vector<cplx> boundary_zero_scan(const GammaFunction& gamma, const ClassifySettings& s) {
  const int m = s.boundary_grid;
  std::vector<double> vals(static_cast<std::size_t>(m), std::numeric_limits<double>::infinity());
  auto value_at = [&](double t) {
    try {
      return std::abs(gamma.eval_scaled(std::polar(1.0, t)).value());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EvaluationFailure) throw;
      return std::numeric_limits<double>::infinity();
    }
  };
  auto theta = [m](int k) { return 2.0 * kPi * (k + 0.5) / m; };
  for (int k = 0; k < m; ++k) vals[static_cast<std::size_t>(k)] = value_at(theta(k));
  std::vector<cplx> zeros;
  for (int k = 0; k < m; ++k) {
    const double v = vals[static_cast<std::size_t>(k)];
    const double left = vals[static_cast<std::size_t>((k + m - 1) % m)];
    const double right = vals[static_cast<std::size_t>((k + 1) % m)];
    if (!(v <= left && v <= right) || !std::isfinite(v)) continue;
    // Golden-section refinement of the local minimum.
    double a = theta(k) - 2.0 * kPi / m, b = theta(k) + 2.0 * kPi / m;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = value_at(c), fd = value_at(d);
    for (int it = 0; it < 80 && b - a > 1e-14; ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = value_at(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = value_at(d);
      }
    }
    const double t = fc < fd ? c : d;
    const double best = std::min({fc, fd, v});
    if (best < s.boundary_zero_tolerance) {
      const cplx z = std::polar(1.0, t);
      if (std::none_of(zeros.begin(), zeros.end(), [&](cplx q) { return std::abs(q - z) < 1e-6; })) zeros.push_back(z);
    } else if (best < s.boundary_certify) {
      std::ostringstream os;
      os << "boundary minimum " << best << " at angle " << t << " is neither a zero nor clearly nonzero";
      fail(ErrorKind::BoundaryResolutionExceeded, os.str());
    }
  }
  return zeros;
}

}  // namespace

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Dense: return "Dense";
    case VerdictKind::FiniteCodim: return "FiniteCodim";
    case VerdictKind::InfiniteCodim: return "InfiniteCodim";
    case VerdictKind::GammaZero: return "GammaZero";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

std::string to_string(Reason reason) {
  switch (reason) {
    case Reason::ZeroFree: return "ZeroFree";
    case Reason::FiniteZeros: return "FiniteZeros";
    case Reason::InfiniteZerosSuspected: return "InfiniteZerosSuspected";
    case Reason::SingularFactorSuspected: return "SingularFactorSuspected";
    case Reason::IdenticallyZero: return "IdenticallyZero";
    case Reason::DefectUnstable: return "DefectUnstable";
  }
  return "Unknown";
}

Verdict classify(const Generator& gen, const AnalyticOracle& g, const ClassifySettings& s) {
  require_classifiable(gen, g);
  bool exact = false;
  const GammaFunction gamma = build_gamma(gen, g, s, exact);
  Verdict v;
  v.diagnostics.path = exact ? "exact" : "oracle";
  if (identically_zero(gamma, exact, s, v)) {
    mark_gamma_zero(gen, g, s, v);
    return v;
  }
  if (exact) {
    std::vector<cplx> boundary;
    split_exact_zeros(*gamma.exact(), s.circle_tolerance, v.diagnostics.zeros, boundary);
    for (const auto& b : boundary) {
      std::ostringstream os;
      os << "boundary zero " << b << " is an outer factor";
      v.diagnostics.notes.push_back(os.str());
    }
    v.exact_codim = monomial_exact_codim(gen, g.to_exact_rational());
  } else {
    try {
      v.diagnostics.zeros = find_zeros(gamma, s.zero_search_radius, s.max_zeros, s.contour_points);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      v.kind = VerdictKind::InfiniteCodim;
      v.reason = Reason::InfiniteZerosSuspected;
      v.diagnostics.notes.push_back(e.what());
      return v;
    }
    v.kind = VerdictKind::Dense;
    v.diagnostics.defect = outer_defect(gamma, s.radii, s.defect_points, v.diagnostics.zeros, s.threads);
    apply_defect(v, *v.diagnostics.defect, s);
    if (v.kind == VerdictKind::InfiniteCodim || v.kind == VerdictKind::Inconclusive) return v;
  }
  const int count = total_multiplicity(v.diagnostics.zeros);
  v.codim_bound = count;
  if (count == 0) {
    v.kind = VerdictKind::Dense;
    v.reason = Reason::ZeroFree;
  } else {
    v.kind = VerdictKind::FiniteCodim;
    v.reason = Reason::FiniteZeros;
  }
  return v;
}

Verdict disk_algebra_classify(const Generator& gen, const AnalyticOracle& g, const ClassifySettings& s) {
  require_classifiable(gen, g);
  if (!g.boundary_continuous() && !g.is_rational())
    fail(ErrorKind::InvalidInput, "disk-algebra mode needs g declared boundary_continuous");
  bool exact = false;
  const GammaFunction gamma = build_gamma(gen, g, s, exact);
  Verdict v;
  v.diagnostics.path = exact ? "exact" : "oracle";
  if (identically_zero(gamma, exact, s, v)) {
    mark_gamma_zero(gen, g, s, v);
    return v;
  }
  if (exact) {
    split_exact_zeros(*gamma.exact(), s.circle_tolerance, v.diagnostics.zeros, v.diagnostics.boundary_zeros);
  } else {
    try {
      v.diagnostics.zeros = find_zeros(gamma, s.zero_search_radius, s.max_zeros, s.contour_points);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      v.kind = VerdictKind::InfiniteCodim;
      v.reason = Reason::InfiniteZerosSuspected;
      v.diagnostics.notes.push_back(e.what());
      return v;
    }
    v.diagnostics.boundary_zeros = boundary_zero_scan(gamma, s);
    if (!v.diagnostics.zeros.empty() || !v.diagnostics.boundary_zeros.empty()) {
      v.kind = VerdictKind::FiniteCodim;
      v.diagnostics.defect = outer_defect(gamma, s.radii, s.defect_points, v.diagnostics.zeros, s.threads);
      apply_defect(v, *v.diagnostics.defect, s);
      if (v.kind == VerdictKind::InfiniteCodim || v.kind == VerdictKind::Inconclusive) return v;
    }
  }
  const int codim = static_cast<int>(v.diagnostics.boundary_zeros.size()) + total_multiplicity(v.diagnostics.zeros);
  v.codim_bound = codim;
  v.exact_codim = codim;
  if (codim == 0) {
    v.kind = VerdictKind::Dense;
    v.reason = Reason::ZeroFree;
  } else {
    v.kind = VerdictKind::FiniteCodim;
    v.reason = Reason::FiniteZeros;
  }
  return v;
}

std::vector<cplx> structure_samples(const Generator& gen, int count) {
  const std::vector<cplx> s0 = gen.s0_points();
  std::vector<cplx> out;
  for (int i = 1; static_cast<int>(out.size()) < count && i < 100 * count; ++i) {
    const cplx z = disk_point(i + 17, 0.8);
    const bool near = std::any_of(s0.begin(), s0.end(), [&](cplx s) { return std::abs(z - s) < 1e-3; });
    if (!near) out.push_back(z);
  }
  return out;
}

VanishingStructure vanishing_structure(const Generator& gen, const AnalyticOracle& g, const std::vector<cplx>& samples,
                                       double tolerance) {
  if (samples.empty()) fail(ErrorKind::InvalidInput, "vanishing structure needs sample points");
  VanishingStructure vs;
  vs.degree = gen.degree();
  for (const auto& z : samples) {
    const Fiber f = gen.fiber(z);
    if (f.degenerate()) continue;
    std::vector<cplx> vals;
    for (const auto& p : f.points) vals.push_back(g.eval(p));
    const std::size_t n = vals.size();
    std::vector<int> block(n, -1);
    VanishingStructure::Sample sample{z, f.points, {}};
    for (std::size_t i = 0; i < n; ++i) {
      if (block[i] >= 0) continue;
      block[i] = static_cast<int>(sample.blocks.size());
      sample.blocks.push_back({static_cast<int>(i)});
      for (std::size_t j = i + 1; j < n; ++j) {
        if (block[j] < 0 && std::abs(vals[i] - vals[j]) <= tolerance * std::max(1.0, std::abs(vals[i]))) {
          block[j] = block[i];
          sample.blocks.back().push_back(static_cast<int>(j));
        }
      }
    }
    const std::size_t m = sample.blocks.front().size();
    for (const auto& b : sample.blocks)
      if (b.size() != m) fail(ErrorKind::StructureNotFound, "fiber blocks of unequal size at a sample point");
    if (m < 2) fail(ErrorKind::StructureNotFound, "g separates the fiber at a sample point; Gamma does not vanish there");
    if (vs.block_size == 0) vs.block_size = static_cast<int>(m);
    else if (vs.block_size != static_cast<int>(m)) fail(ErrorKind::StructureNotFound, "block size changes between samples");
    vs.samples.push_back(std::move(sample));
  }
  if (vs.samples.empty()) fail(ErrorKind::StructureNotFound, "every sample point had a degenerate fiber");
  if (vs.degree % vs.block_size != 0) fail(ErrorKind::StructureNotFound, "block size does not divide the degree");
  return vs;
}

cplx Annihilator::apply(const AnalyticOracle& f) const {
  if (kind == Kind::PointDifference) return f.eval(point) - f.eval(partner);
  return f.derivative(point);
}

Annihilator annihilator_at_zero(const GammaFunction& gamma, cplx a, const WitnessSettings& settings) {
  const Witness w = gamma_zero_witness(gamma, a, settings);
  Annihilator ann;
  ann.point = w.zero;
  ann.partner = w.partner;
  ann.kind = w.kind == Witness::Kind::PartnerPoint ? Annihilator::Kind::PointDifference : Annihilator::Kind::DerivativeAt;
  const auto& gen = gamma.generator();
  const auto& g = gamma.g();
  const cplx ga = g.eval(a), ba = gen.eval(a);
  if (ann.kind == Annihilator::Kind::PointDifference) {
    const cplx gb = g.eval(ann.partner), bb = gen.eval(ann.partner);
    for (int al = 0; al <= 4; ++al)
      for (int be = 0; be <= 4; ++be)
        ann.self_test_max = std::max(ann.self_test_max, std::abs(std::pow(ga, al) * std::pow(ba, be) - std::pow(gb, al) * std::pow(bb, be)));
  } else {
    const cplx gp = g.derivative(a), bp = gen.derivative_at(a);
    for (int al = 0; al <= 4; ++al)
      for (int be = 0; be <= 4; ++be) {
        cplx d(0);
        if (al > 0) d += static_cast<double>(al) * std::pow(ga, al - 1) * gp * std::pow(ba, be);
        if (be > 0) d += static_cast<double>(be) * std::pow(ga, al) * std::pow(ba, be - 1) * bp;
        ann.self_test_max = std::max(ann.self_test_max, std::abs(d));
      }
  }
  return ann;
}

MonomialCodim monomial_codim(int n, int m) {
  if (n < 2 || m < 2) fail(ErrorKind::InvalidInput, "monomial exponents must be at least 2");
  if (std::gcd(n, m) != 1) fail(ErrorKind::NotCoprime, "gcd(" + std::to_string(n) + ", " + std::to_string(m) + ") > 1");
  MonomialCodim out;
  out.order = (n - 1) * (m - 1);
  out.codim = out.order / 2;
  const int limit = n * m + 1;
  std::vector<bool> reach(static_cast<std::size_t>(limit + 1), false);
  for (int a = 0; a * n <= limit; ++a)
    for (int b = 0; a * n + b * m <= limit; ++b) reach[static_cast<std::size_t>(a * n + b * m)] = true;
  for (int k = 0; k <= limit; ++k)
    if (!reach[static_cast<std::size_t>(k)]) {
      ++out.gaps;
      out.conductor = k + 1;
    }
  if (out.gaps != out.codim || out.conductor != out.order)
    throw std::logic_error("semigroup enumeration disagrees with the closed form");
  return out;
}

FamilyBound generator_count_bound(const std::vector<ExactPoly>& family) {
  FamilyBound out;
  for (std::size_t j = 0; j < family.size(); ++j) {
    std::optional<int> best;
    if (family[j].degree() >= 1) {
      for (std::size_t k = 0; k < family.size(); ++k) {
        if (k == j) continue;
        const ExactPoly gamma = gamma_exact(family[j], family[k]);
        if (gamma.is_zero()) continue;
        const int count = disk_zero_count(gamma, mpq_class(1));
        best = best ? std::min(*best, count) : count;
      }
    }
    out.per_generator.push_back(best);
    if (best) out.bound = out.bound ? std::min(*out.bound, *best) : *best;
  }
  return out;
}

bool no_common_disk_zero(const std::vector<ExactPoly>& family, std::size_t j) {
  if (j >= family.size()) fail(ErrorKind::InvalidInput, "generator index out of range");
  std::optional<ExactPoly> common;
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (k == j) continue;
    const ExactPoly gamma = gamma_exact(family[j], family[k]);
    if (gamma.is_zero()) continue;
    common = common ? poly_gcd(*common, gamma) : make_monic(gamma);
  }
  if (!common) return false;
  if (common->degree() < 1) return true;
  return disk_zero_count(*common, mpq_class(1)) == 0;
}

}  // namespace fiberalg
