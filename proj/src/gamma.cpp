#include "fiberalg/gamma.hpp"

#include <cmath>
#include <numbers>
#include <sstream>


namespace fiberalg {
namespace {

std::string fmt_c(cplx z) {
  std::ostringstream os;
  os.precision(10);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

ExactPoly constant_power(const ExactPoly& p, int e) { return pow(p, e); }

// prod over the roots of K (in t) of h, times lc_t(K)^{deg_t h}.
ExactPoly resultant_or_power(const ExactBivariate& k, const ExactBivariate& h) {
  if (h.degree_t() >= 1) return resultant_in_t(k, h);
  return pow(h.coeff(0), k.degree_t());
}

}  // namespace

ExactBivariate fiber_relation(const Generator& gen) {
  if (gen.is_blaschke()) {
    const ExactPoly n = gen.blaschke().exact_numerator();
    const ExactPoly d = gen.blaschke().exact_denominator();
    return ExactBivariate::in_t(n) * ExactBivariate::in_z(d) - ExactBivariate::in_z(n) * ExactBivariate::in_t(d);
  }
  const ExactPoly& p = gen.exact_poly();
  return ExactBivariate::in_t(p) - ExactBivariate::in_z(p);
}

GammaFunction::GammaFunction(Generator generator, AnalyticOracle g, GammaSettings settings)
    : gen_(std::move(generator)), g_(std::move(g)), settings_(settings) {
  s0_ = gen_.s0_points();
  if (settings_.compute_exact && g_.is_rational()) exact_ = gamma_exact(gen_, g_);
}

double GammaFunction::distance_to_s0(cplx z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : s0_) best = std::min(best, std::abs(z - s));
  return best;
}

ScaledComplex GammaFunction::direct(cplx z) const {
  const Fiber f = gen_.fiber(z, settings_.fiber);
  return gamma_product(g_, z, f.others());
}

ScaledComplex GammaFunction::eval_scaled(cplx z) const {
  if (!gen_.in_domain(z, 1e-12)) fail(ErrorKind::OutsideDomain, "Gamma evaluated at " + fmt_c(z) + " outside the closed disk");
  if (degree() == 1) return ScaledComplex(1.0);
  if (distance_to_s0(z) >= settings_.exclusion_radius) {
    try {
      return direct(z);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EvaluationFailure) throw;
    }
  }
  // Mean value over a small circle; exact for analytic Gamma up to terms of
  // order (radius)^points.
  ScaledComplex acc;
  const int m = settings_.averaging_points;
  for (int k = 0; k < m; ++k) {
    const cplx p = z + std::polar(settings_.averaging_radius, 2.0 * std::numbers::pi * (k + 0.5) / m);
    acc += direct(p);
  }
  return acc / ScaledComplex(static_cast<double>(m));
}

cplx GammaFunction::eval(cplx z) const {
  const ScaledComplex v = eval_scaled(z);
  if (!v.is_finite()) fail(ErrorKind::EvaluationFailure, "Gamma is not finite at " + fmt_c(z));
  return v.value();
}

cplx GammaFunction::derivative(cplx z) const {
  if (exact_) {
    const FloatRational r = to_float(*exact_);
    const FloatPoly n = r.num(), d = r.den();
    const cplx dv = poly_eval(d, z);
    return (poly_eval(fiberalg::derivative(n), z) * dv - poly_eval(n, z) * poly_eval(fiberalg::derivative(d), z)) / (dv * dv);
  }
  constexpr double h = 1e-6;
  return (eval(z + h) - eval(z - h)) / (2.0 * h);
}

cplx gamma_eval(const GammaFunction& gamma, cplx z) { return gamma.eval(z); }

ScaledComplex gamma_product(const AnalyticOracle& g, cplx z, const std::vector<cplx>& others) {
  const ScaledComplex gz = g.eval_scaled(z);
  ScaledComplex acc(1.0);
  for (const auto& p : others) {
    const cplx d = z - p;
    if (d == cplx(0.0)) fail(ErrorKind::EvaluationFailure, "fiber point coincides with the base point");
    acc *= (gz - g.eval_scaled(p)) / ScaledComplex(d);
  }
  return acc;
}

ExactRational gamma_exact(const Generator& gen, const AnalyticOracle& g) {
  const ExactRational r = g.to_exact_rational();
  const int n = gen.degree();
  if (n == 1) return ExactRational(ExactPoly::constant(1));
  const ExactPoly& p = r.num();
  const ExactPoly& q = r.den();
  const ExactBivariate k = divide_by_t_minus_z(fiber_relation(gen));
  if (k.degree_t() != n - 1) fail(ErrorKind::DegenerateLeading, "fiber relation lost degree in t");
  // g(z) - g(t) = G / (Q(z) Q(t)), and H = G / (z - t).
  const ExactBivariate big_g = ExactBivariate::in_z(p) * ExactBivariate::in_t(q) - ExactBivariate::in_t(p) * ExactBivariate::in_z(q);
  if (big_g.is_zero()) return ExactRational();
  const ExactBivariate h = -divide_by_t_minus_z(big_g);
  const ExactPoly res_h = resultant_or_power(k, h);
  const ExactPoly res_q = resultant_or_power(k, ExactBivariate::in_t(q));
  const ExactPoly lc = k.leading_t();
  const int e = std::max(q.degree(), 0) - std::max(h.degree_t(), 0);
  ExactPoly num = res_h;
  ExactPoly den = pow(q, n - 1) * res_q;
  if (e > 0) num *= constant_power(lc, e);
  if (e < 0) den *= constant_power(lc, -e);
  return ExactRational(num, den);
}

ExactPoly gamma_exact(const ExactPoly& p, const ExactPoly& q) {
  const ExactRational r = gamma_exact(Generator(p), AnalyticOracle::poly(q));
  if (r.den().degree() > 0) fail(ErrorKind::InvalidInput, "Gamma of polynomials should be a polynomial");
  return r.num() * (GaussianRational(1) / r.den().leading());
}

Witness gamma_zero_witness(const GammaFunction& gamma, cplx z0, const WitnessSettings& s) {
  const double value = std::abs(gamma.eval(z0));
  if (!(value <= s.zero_tolerance))
    fail(ErrorKind::NotAZero, "|Gamma(" + fmt_c(z0) + ")| = " + std::to_string(value) + " is above the zero tolerance");
  const auto& gen = gamma.generator();
  const auto& g = gamma.g();
  const Fiber f = gen.fiber(z0, gamma.settings().fiber);
  const cplx gz = g.eval(z0);
  double best = std::numeric_limits<double>::infinity();
  cplx partner = z0;
  for (const auto& p : f.others()) {
    if (std::abs(p - z0) <= s.distinct_tolerance) continue;
    const double gap = std::abs(g.eval(p) - gz);
    if (gap < best) {
      best = gap;
      partner = p;
    }
  }
  if (best < s.witness_tolerance)
    return {Witness::Kind::PartnerPoint, z0, partner, std::abs(gen.eval(partner) - gen.eval(z0)), best};
  const double bp = std::abs(gen.derivative_at(z0));
  const double gp = std::abs(g.derivative(z0));
  if (bp < s.witness_tolerance && gp < s.witness_tolerance)
    return {Witness::Kind::CriticalDerivative, z0, z0, bp, gp};
  std::ostringstream os;
  os << "no coincident fiber partner (best gap " << best << ") and |B'| = " << bp << ", |g'| = " << gp << " at " << fmt_c(z0);
  fail(ErrorKind::NoWitness, os.str());
}

ScalingLawReport gamma_scaling_law_check(const GammaFunction& gamma, cplx c, const AnalyticOracle& h,
                                         const std::vector<cplx>& points) {
  GammaSettings s = gamma.settings();
  s.compute_exact = false;
  const GammaFunction scaled(gamma.generator(), AnalyticOracle::scale(c, gamma.g()), s);
  const GammaFunction shifted(gamma.generator(),
                              AnalyticOracle::sum({gamma.g(), AnalyticOracle::compose(h, gamma.generator().as_oracle())}), s);
  const cplx factor = std::pow(c, gamma.degree() - 1);
  ScalingLawReport report;
  for (const auto& z : points) {
    const cplx base = gamma.eval(z);
    const cplx expect = factor * base;
    report.homogeneity_error = std::max(report.homogeneity_error, std::abs(scaled.eval(z) - expect) / std::max(1.0, std::abs(expect)));
    report.shift_error = std::max(report.shift_error, std::abs(shifted.eval(z) - base) / std::max(1.0, std::abs(base)));
  }
  return report;
}

}  // namespace fiberalg
