#include <algorithm>
#include <cmath>
#include <numbers>

#include "fiberalg/parallel.hpp"
#include "fiberalg/verdict.hpp"

namespace fiberalg {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOriginRadius = 1e-6;  // zeros this close to 0 are treated as origin zeros
constexpr int kMaxRawPoints = 1 << 17;

double log_abs_gamma(const GammaFunction& gamma, cplx z) {
  const double v = gamma.eval_scaled(z).log_abs();
  if (!std::isfinite(v)) fail(ErrorKind::NearCircleZero, "Gamma vanishes on a sampling circle");
  return v;
}

// Trapezoid mean of log|Gamma| on |z| = r, doubling until two successive
// means agree.
double resolved_log_mean(const GammaFunction& gamma, double r, int threads, int& points, bool& converged) {
  int n = 256;
  auto sample = [&](int count, int stride, int offset) {
    const auto vals = parallel_map<double>(static_cast<std::size_t>(count), threads, [&](std::size_t k) {
      const double t = 2.0 * kPi * (static_cast<double>(k) * stride + offset) / (static_cast<double>(count) * stride);
      return log_abs_gamma(gamma, std::polar(r, t));
    });
    double s = 0.0;
    for (double v : vals) s += v;
    return s;
  };
  double sum = sample(n, 1, 0);
  double mean = sum / n;
  converged = false;
  while (n < kMaxRawPoints) {
    // New points sit halfway between the old ones.
    sum += sample(n, 2, 1);
    n *= 2;
    const double next = sum / n;
    const double change = std::abs(next - mean);
    mean = next;
    if (change < 1e-10) {
      converged = true;
      break;
    }
  }
  points = n;
  return mean;
}

double log_blaschke_factors(const std::vector<Root>& zeros, cplx z) {
  double s = 0.0;
  for (const auto& a : zeros) {
    if (std::abs(a.value) < kOriginRadius) s += a.multiplicity * std::log(std::abs(z));
    else s += a.multiplicity * std::log(std::abs((a.value - z) / (1.0 - std::conj(a.value) * z)));
  }
  return s;
}

}  // namespace

OuterDefect outer_defect(const GammaFunction& gamma, const std::vector<double>& radii, int points,
                         const std::vector<Root>& zeros, int threads) {
  if (radii.empty()) fail(ErrorKind::InvalidInput, "outer defect needs at least one radius");
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0)) fail(ErrorKind::InvalidInput, "defect radii must lie in (0, 1)");
  if (points < 8) fail(ErrorKind::InvalidInput, "defect grid needs at least 8 points");
  std::vector<double> sorted = radii;
  std::sort(sorted.begin(), sorted.end());

  OuterDefect out;
  out.points = points;
  out.zeros = zeros;
  for (const auto& a : zeros)
    if (std::abs(a.value) < kOriginRadius) out.origin_multiplicity += a.multiplicity;
  const int k0 = out.origin_multiplicity;

  // c = lim Gamma(z) / z^k0 at 0, by the mean value property on |z| = 1/4.
  {
    constexpr int m = 64;
    constexpr double rho = 0.25;
    ScaledComplex acc;
    double typical = 0.0;
    for (int j = 0; j < m; ++j) {
      const cplx z = std::polar(rho, 2.0 * kPi * (j + 0.5) / m);
      const ScaledComplex v = gamma.eval_scaled(z) / ScaledComplex(std::pow(z, k0));
      typical = std::max(typical, v.log_abs());
      acc += v;
    }
    const ScaledComplex c = acc / ScaledComplex(static_cast<double>(m));
    out.log_center = c.log_abs();
    if (!std::isfinite(out.log_center) || out.log_center < typical - std::log(1e12))
      fail(ErrorKind::ZeroAtOrigin, "Gamma vanishes at the origin beyond the listed multiplicity " + std::to_string(k0));
  }
  double log_center_removed = out.log_center;
  for (const auto& a : zeros)
    if (std::abs(a.value) >= kOriginRadius) log_center_removed -= a.multiplicity * std::log(std::abs(a.value));

  for (double r : sorted) {
    DefectRow row;
    row.radius = r;
    const double mean = resolved_log_mean(gamma, r, threads, row.raw_points, row.raw_converged);
    row.raw_defect = mean - k0 * std::log(r) - out.log_center;
    for (const auto& a : zeros) {
      const double m = std::abs(a.value);
      if (m >= kOriginRadius && m < r) row.zero_mass += a.multiplicity * std::log(r / m);
    }
    auto sampled = [&](int n) {
      const auto vals = parallel_map<double>(static_cast<std::size_t>(n), threads, [&](std::size_t k) {
        const cplx z = std::polar(r, 2.0 * kPi * (static_cast<double>(k) + 0.5) / n);
        return log_abs_gamma(gamma, z) - log_blaschke_factors(zeros, z);
      });
      double s = 0.0;
      for (double v : vals) s += v;
      return s / n - log_center_removed;
    };
    row.sampled = sampled(points);
    row.sampled_refined = sampled(2 * points);
    out.rows.push_back(row);
  }
  const DefectRow& last = out.rows.back();
  out.raw_defect = last.raw_defect;
  out.defect_after_zero_removal = last.sampled;
  out.defect_refined = last.sampled_refined;
  out.extrapolated = last.sampled;
  if (out.rows.size() >= 2) {
    const DefectRow& prev = out.rows[out.rows.size() - 2];
    out.extrapolated = last.sampled + (last.sampled - prev.sampled) * (1.0 - last.radius) / (last.radius - prev.radius);
  }
  return out;
}

OuterDefect outer_defect(const GammaFunction& gamma, const std::vector<double>& radii, int points) {
  const double outer = *std::max_element(radii.begin(), radii.end());
  return outer_defect(gamma, radii, points, find_zeros(gamma, outer));
}

}  // namespace fiberalg
