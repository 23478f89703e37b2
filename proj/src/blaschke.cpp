#include "fiberalg/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace fiberalg {
namespace {

std::string fmt_c(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx unimodular) : zeros_(std::move(zeros)), c_(unimodular) {
  if (zeros_.empty()) fail(ErrorKind::InvalidInput, "a Blaschke product needs at least one zero");
  for (const auto& a : zeros_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || std::abs(a) >= 1.0 - kZeroMargin)
      fail(ErrorKind::InvalidInput, "Blaschke zero " + fmt_c(a) + " is not inside the open unit disk");
  }
  if (std::abs(std::abs(c_) - 1.0) > kUnimodularTolerance)
    fail(ErrorKind::InvalidInput, "unimodular constant " + fmt_c(c_) + " does not have modulus one");
  num_ = FloatPoly::constant(1.0);
  den_ = FloatPoly::constant(1.0);
  for (const auto& a : zeros_) {
    num_ *= FloatPoly{a, -1.0};
    den_ *= FloatPoly{1.0, -std::conj(a)};
  }
}

BlaschkeProduct BlaschkeProduct::power(int n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "degree must be positive");
  return BlaschkeProduct(std::vector<cplx>(static_cast<std::size_t>(n), 0.0), n % 2 == 0 ? 1.0 : -1.0);
}

bool BlaschkeProduct::vanishes_at_origin() const {
  return std::any_of(zeros_.begin(), zeros_.end(), [](cplx a) { return a == cplx(0.0); });
}

ExactPoly BlaschkeProduct::exact_numerator() const {
  ExactPoly p = ExactPoly::constant(GaussianRational::from_complex(c_));
  for (const auto& a : zeros_) p *= ExactPoly{GaussianRational::from_complex(a), GaussianRational(-1)};
  return p;
}

ExactPoly BlaschkeProduct::exact_denominator() const {
  ExactPoly p = ExactPoly::constant(1);
  for (const auto& a : zeros_) p *= ExactPoly{GaussianRational(1), -GaussianRational::from_complex(a).conj()};
  return p;
}

void BlaschkeProduct::check_domain(cplx z) const {
  if (!(std::abs(z) <= 1.0 + kDomainSlack)) fail(ErrorKind::OutsideDomain, "point " + fmt_c(z) + " lies outside the closed disk");
}

cplx BlaschkeProduct::eval(cplx z) const {
  check_domain(z);
  cplx v = c_;
  for (const auto& a : zeros_) v *= (a - z) / (1.0 - std::conj(a) * z);
  return v;
}

cplx BlaschkeProduct::derivative_at(cplx z) const {
  check_domain(z);
  const cplx n = poly_eval(num_, z), d = poly_eval(den_, z);
  const cplx np = poly_eval(fiberalg::derivative(num_), z), dp = poly_eval(fiberalg::derivative(den_), z);
  return c_ * (np * d - n * dp) / (d * d);
}

FloatRational BlaschkeProduct::derivative() const {
  FloatPoly top = (fiberalg::derivative(num_) * den_ - num_ * fiberalg::derivative(den_)) * c_;
  return {top, den_ * den_};
}

FloatPoly BlaschkeProduct::fiber_polynomial(cplx w) const { return num_ * c_ - den_ * w; }

double Fiber::min_separation() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) best = std::min(best, std::abs(points[i] - points[j]));
  return best;
}

Fiber assemble_fiber(cplx base, std::vector<cplx> roots, double cluster_tolerance) {
  Fiber f;
  f.base = base;
  std::size_t nearest = 0;
  for (std::size_t j = 1; j < roots.size(); ++j)
    if (std::abs(roots[j] - base) < std::abs(roots[nearest] - base)) nearest = j;
  roots[nearest] = base;
  std::swap(roots[0], roots[nearest]);
  f.points = std::move(roots);
  const std::size_t n = f.points.size();
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (owner[i] >= 0) continue;
    owner[i] = static_cast<int>(f.groups.size());
    f.groups.push_back({static_cast<int>(i)});
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = std::max({1.0, std::abs(f.points[i]), std::abs(f.points[j])});
      if (owner[j] < 0 && std::abs(f.points[i] - f.points[j]) <= cluster_tolerance * scale) {
        owner[j] = owner[i];
        f.groups.back().push_back(static_cast<int>(j));
      }
    }
  }
  return f;
}

Fiber fiber(const BlaschkeProduct& b, cplx z, const FiberOptions& opts) {
  if (!(std::abs(z) <= 1.0 + 1e-9)) fail(ErrorKind::OutsideDomain, "fiber base " + fmt_c(z) + " lies outside the closed disk");
  const cplx w = b.eval(z);
  const FloatPoly poly = b.fiber_polynomial(w);
  if (poly.degree() < b.degree() || std::abs(poly.leading()) < opts.leading_tolerance)
    fail(ErrorKind::DegenerateLeading, "fiber polynomial lost its leading coefficient");
  Fiber f = assemble_fiber(z, poly_root_values(poly), opts.cluster_tolerance);
  for (const auto& p : f.points) f.residual = std::max(f.residual, std::abs(b.eval(p) - w));
  return f;
}

cplx discriminant_d(const BlaschkeProduct& b, cplx z) {
  const cplx w = b.eval(z);
  const FloatPoly poly = b.fiber_polynomial(w);
  if (poly.degree() < b.degree()) fail(ErrorKind::DegenerateLeading, "fiber polynomial lost its leading coefficient");
  return poly_eval(fiberalg::derivative(poly), z) / poly.leading();
}

bool CriticalData::in_s0(const BlaschkeProduct& b, cplx z) const {
  const cplx w = b.eval(z);
  return std::any_of(critical_values.begin(), critical_values.end(),
                     [&](cplx v) { return std::abs(w - v) < s0_tolerance; });
}

CriticalData critical_data(const BlaschkeProduct& b, double s0_tolerance) {
  CriticalData data;
  data.s0_tolerance = s0_tolerance;
  const FloatPoly top = b.derivative().num();
  if (top.degree() >= 1) {
    for (const auto& r : poly_roots(top).roots)
      if (std::abs(r.value) < 1.0) data.critical_points.roots.push_back(r);
  }
  for (const auto& r : data.critical_points.roots) {
    data.critical_values.push_back(b.eval(r.value));
    data.critical_points.residual = std::max(data.critical_points.residual, std::abs(poly_eval(top, r.value)));
  }
  return data;
}

std::vector<cplx> s0_points(const BlaschkeProduct& b, const CriticalData& data) {
  std::vector<cplx> out;
  for (const auto& r : data.critical_points.roots) {
    for (const auto& p : fiber(b, r.value).points) {
      const bool seen = std::any_of(out.begin(), out.end(), [&](cplx q) { return std::abs(p - q) < 1e-12; });
      if (!seen) out.push_back(p);
    }
  }
  return out;
}

NormalizedBlaschke normalize_origin(const BlaschkeProduct& b) {
  if (b.vanishes_at_origin()) return {b, FloatRational(FloatPoly::x()), 0.0};
  const cplx a = b.zeros().front();
  auto mu = [&](cplx w) { return (a - w) / (1.0 - std::conj(a) * w); };
  std::vector<cplx> moved;
  for (const auto& z : b.zeros()) moved.push_back(mu(z));
  moved.front() = 0.0;
  // Fix the constant at w = 1, where every factor is unimodular.
  BlaschkeProduct unit(moved, 1.0);
  cplx c = b.eval(mu(1.0)) / unit.eval(1.0);
  c /= std::abs(c);
  return {BlaschkeProduct(moved, c), FloatRational(FloatPoly{a, -1.0}, FloatPoly{1.0, -std::conj(a)}), a};
}

std::vector<cplx> elementary_symmetric(const std::vector<cplx>& values) {
  std::vector<cplx> e(values.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * values[i];
  return e;
}

SymmetricReduction symmetric_reduce(const BlaschkeProduct& b, cplx z, const std::vector<cplx>& other_points,
                                    double tolerance) {
  if (!b.vanishes_at_origin())
    fail(ErrorKind::InvalidInput, "symmetric reduction needs B(0) = 0; apply normalize_origin first");
  const int n = b.degree();
  if (static_cast<int>(other_points.size()) != n - 1)
    fail(ErrorKind::InvalidInput, "expected " + std::to_string(n - 1) + " fiber points besides z");
  SymmetricReduction out;
  const cplx c = b.unimodular();
  const double sign_n = n % 2 == 0 ? 1.0 : -1.0;
  for (int k = 0; k <= n; ++k) {
    const double s = (k % 2 == 0 ? 1.0 : -1.0) * sign_n;
    out.u.push_back(s * b.numerator().coeff(static_cast<std::size_t>(n - k)));
    out.v.push_back(-s * b.denominator().coeff(static_cast<std::size_t>(n - k)) / c);
  }
  const cplx w = b.eval(z);
  out.recursion.push_back(1.0);
  for (int k = 1; k < n; ++k) out.recursion.push_back(out.u[k] + out.v[k] * w - z * out.recursion.back());
  out.direct = elementary_symmetric(other_points);
  for (int k = 0; k < n; ++k)
    out.max_mismatch = std::max(out.max_mismatch, std::abs(out.recursion[k] - out.direct[k]) / std::max(1.0, std::abs(out.direct[k])));
  // The recursion must terminate: sigma_n - z sigma'_{n-1} = 0.
  out.max_mismatch = std::max(out.max_mismatch, std::abs(out.u[n] + out.v[n] * w - z * out.recursion.back()));
  if (out.max_mismatch > tolerance)
    fail(ErrorKind::InconsistentFiber, "fiber points disagree with the symmetric recursion (mismatch " +
                                           std::to_string(out.max_mismatch) + ")");
  return out;
}

std::vector<cplx> circular_fiber(const BlaschkeProduct& b, double theta) {
  const cplx z = std::polar(1.0, theta);
  Fiber f = fiber(b, z);
  std::vector<std::pair<double, cplx>> keyed;
  for (std::size_t j = 1; j < f.points.size(); ++j) {
    double d = std::arg(f.points[j]) - theta;
    d = std::fmod(d, 2.0 * M_PI);
    if (d <= 0) d += 2.0 * M_PI;
    keyed.emplace_back(d, f.points[j]);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<cplx> out{z};
  for (const auto& [d, p] : keyed) out.push_back(p);
  return out;
}

}  // namespace fiberalg
