#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "fiberalg/verdict.hpp"

namespace fiberalg {
namespace {

constexpr double kPi = std::numbers::pi;
using Path = std::function<cplx(double)>;

struct Sample {
  ScaledComplex value;
  double rate;  // |d log Gamma / dz|, estimated by a short forward difference
};

Sample contour_sample(const GammaFunction& gamma, cplx z) {
  const ScaledComplex v = gamma.eval_scaled(z);
  if (v.is_zero() || !v.is_finite()) {
    std::ostringstream os;
    os << "Gamma vanishes or is not finite on the contour at " << z;
    fail(ErrorKind::NearCircleZero, os.str());
  }
  constexpr double delta = 1e-7;
  const cplx step = z == cplx(0) ? cplx(delta) : delta * z / std::abs(z);
  double rate = 0.0;
  try {
    const ScaledComplex ratio = gamma.eval_scaled(z - step) / v;
    if (!ratio.is_zero() && ratio.is_finite())
      rate = std::abs(cplx(ratio.log_abs(), ratio.arg())) / delta;
    else
      rate = std::numeric_limits<double>::infinity();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EvaluationFailure && e.kind() != ErrorKind::OutsideDomain) throw;
  }
  return {v, rate};
}

double phase_step(const ScaledComplex& a, const ScaledComplex& b) {
  return std::arg(b.mantissa() * std::conj(a.mantissa()));
}

// A segment is accepted when the sampled phase step is below pi/2 and the local
// log-derivative bounds the change of log Gamma along the chord by the same
// amount, which rules out whole turns hiding between samples.
double segment_phase(const GammaFunction& gamma, const Path& path, double a, const Sample& fa, double b,
                     const Sample& fb, int depth) {
  const double d = phase_step(fa.value, fb.value);
  const double chord = std::abs(path(b) - path(a));
  if (std::abs(d) < kPi / 2 && std::max(fa.rate, fb.rate) * chord < kPi / 2) return d;
  if (depth >= 48) {
    std::ostringstream os;
    os << "phase refinement stalled near " << path(a) << "; a zero is too close to the contour";
    fail(ErrorKind::NearCircleZero, os.str());
  }
  const double m = 0.5 * (a + b);
  const Sample fm = contour_sample(gamma, path(m));
  return segment_phase(gamma, path, a, fa, m, fm, depth + 1) + segment_phase(gamma, path, m, fm, b, fb, depth + 1);
}

// Winding number of Gamma along a closed path parametrized on [t0, t1].
int winding(const GammaFunction& gamma, const Path& path, double t0, double t1, int pieces) {
  double total = 0.0;
  Sample prev = contour_sample(gamma, path(t0));
  const Sample first = prev;
  for (int k = 1; k <= pieces; ++k) {
    const double a = t0 + (t1 - t0) * (k - 1) / pieces;
    const double b = t0 + (t1 - t0) * k / pieces;
    const Sample next = k == pieces ? first : contour_sample(gamma, path(b));
    total += segment_phase(gamma, path, a, prev, b, next, 0);
    prev = next;
  }
  const double w = total / (2.0 * kPi);
  const long k = std::lround(w);
  if (std::abs(w - static_cast<double>(k)) > 0.05)
    fail(ErrorKind::NearCircleZero, "accumulated phase is not a multiple of 2 pi");
  return static_cast<int>(k);
}

struct Region {
  bool polar = false;
  double a0, a1, b0, b1;  // x-range, y-range; or r-range, theta-range

  cplx center() const {
    if (!polar) return {0.5 * (a0 + a1), 0.5 * (b0 + b1)};
    return std::polar(0.5 * (a0 + a1), 0.5 * (b0 + b1));
  }
  double diameter() const {
    if (!polar) return std::hypot(a1 - a0, b1 - b0);
    return std::hypot(a1 - a0, a1 * std::min(b1 - b0, 2.0 * kPi));
  }
  bool contains(cplx z) const {
    if (!polar) return z.real() >= a0 && z.real() <= a1 && z.imag() >= b0 && z.imag() <= b1;
    const double r = std::abs(z);
    if (r < a0 || r > a1) return false;
    double t = std::arg(z);
    while (t < b0) t += 2.0 * kPi;
    return t <= b1;
  }
  // Counterclockwise boundary on t in [0, 4].
  Path boundary() const {
    const Region self = *this;
    return [self](double t) -> cplx {
      const int edge = std::min(static_cast<int>(t), 3);
      const double s = t - edge;
      if (!self.polar) {
        switch (edge) {
          case 0: return {self.a0 + s * (self.a1 - self.a0), self.b0};
          case 1: return {self.a1, self.b0 + s * (self.b1 - self.b0)};
          case 2: return {self.a1 - s * (self.a1 - self.a0), self.b1};
          default: return {self.a0, self.b1 - s * (self.b1 - self.b0)};
        }
      }
      switch (edge) {
        case 0: return std::polar(self.a1, self.b0 + s * (self.b1 - self.b0));
        case 1: return std::polar(self.a1 - s * (self.a1 - self.a0), self.b1);
        case 2: return std::polar(self.a0, self.b1 - s * (self.b1 - self.b0));
        default: return std::polar(self.a0 + s * (self.a1 - self.a0), self.b0);
      }
    };
  }
  std::array<Region, 4> split(int attempt) const {
    static constexpr double offsets[][2] = {{0.0123, -0.0171}, {-0.0377, 0.0291}, {0.0611, 0.0457}, {-0.0853, -0.0719}};
    const double fa = 0.5 + offsets[attempt % 4][0];
    const double fb = 0.5 + offsets[attempt % 4][1];
    const double am = a0 + fa * (a1 - a0), bm = b0 + fb * (b1 - b0);
    return {Region{polar, a0, am, b0, bm}, Region{polar, am, a1, b0, bm}, Region{polar, a0, am, bm, b1},
            Region{polar, am, a1, bm, b1}};
  }
};

int region_count(const GammaFunction& gamma, const Region& r, int pieces_per_edge = 12) {
  return winding(gamma, r.boundary(), 0.0, 4.0, 4 * pieces_per_edge);
}

cplx newton_simple(const GammaFunction& gamma, cplx z, bool& ok) {
  ok = false;
  for (int it = 0; it < 40; ++it) {
    const cplx v = gamma.eval(z);
    if (v == cplx(0)) {
      ok = true;
      return z;
    }
    const cplx d = gamma.derivative(z);
    if (d == cplx(0) || !std::isfinite(std::abs(d))) return z;
    const cplx step = v / d;
    z -= step;
    if (!std::isfinite(std::abs(z)) || !gamma.generator().in_domain(z)) return z;
    if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(z))) {
      ok = true;
      return z;
    }
  }
  ok = true;
  return z;
}

// Mean of the k zeros inside a circle: c + (1/2 pi i k) \oint (z - c) Gamma'/Gamma dz.
// The widest circle (up to 100 rho) that still winds exactly k times is used,
// which keeps high-order zeros away from the averaging zone around S0.
cplx cluster_centroid(const GammaFunction& gamma, cplx c, double rho, int k) {
  constexpr int m = 64;
  double chosen = 0.0;
  for (double factor : {100.0, 30.0, 10.0, 3.0, 1.0}) {
    const double r = rho * factor;
    if (gamma.generator().is_blaschke() && std::abs(c) + r >= 1.0) continue;
    const Path circle = [&](double t) { return c + std::polar(r, 2.0 * kPi * t); };
    try {
      if (winding(gamma, circle, 0.0, 1.0, 32) == k) {
        chosen = r;
        break;
      }
    } catch (const Error&) {
    }
  }
  if (chosen == 0.0) return c;
  cplx acc(0);
  for (int j = 0; j < m; ++j) {
    const cplx d = std::polar(chosen, 2.0 * kPi * (j + 0.5) / m);
    const cplx z = c + d;
    acc += d * d * gamma.derivative(z) / gamma.eval(z);
  }
  return c + acc / (static_cast<double>(m) * k);
}

class ZeroSearch {
 public:
  ZeroSearch(const GammaFunction& gamma, double cluster_size) : gamma_(gamma), cluster_size_(cluster_size) {}

  void process(const Region& region, int count, std::vector<Root>& out) {
    if (count <= 0) return;
    const double diam = region.diameter();
    if (count == 1 && diam < 1e-2) {
      bool ok = false;
      const cplx z = newton_simple(gamma_, region.center(), ok);
      if (ok && region.contains(z)) {
        out.push_back({z, 1});
        return;
      }
    }
    if (count >= 2 && diam > cluster_size_) {
      // Coincident zeros: the centroid already carries all of them in a tiny circle.
      const cplx c = cluster_centroid(gamma_, region.center(), 0.5 * diam, count);
      const double r = 0.5 * cluster_size_;
      const Path circle = [&](double t) { return c + std::polar(r, 2.0 * kPi * t); };
      try {
        if (region.contains(c) && winding(gamma_, circle, 0.0, 1.0, 16) == count) {
          out.push_back({c, count});
          return;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NearCircleZero) throw;
      }
    }
    if (diam <= cluster_size_) {
      cplx z = cluster_centroid(gamma_, region.center(), diam, count);
      if (count == 1) {
        bool ok = false;
        const cplx polished = newton_simple(gamma_, z, ok);
        if (ok && std::abs(polished - z) < diam) z = polished;
      }
      out.push_back({z, count});
      return;
    }
    for (int attempt = 0; attempt < 4; ++attempt) {
      const auto kids = region.split(attempt);
      std::array<int, 4> counts{};
      try {
        int sum = 0;
        for (int i = 0; i < 4; ++i) sum += counts[i] = region_count(gamma_, kids[i]);
        if (sum != count) continue;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NearCircleZero) throw;
        continue;
      }
      for (int i = 0; i < 4; ++i) process(kids[i], counts[i], out);
      return;
    }
    // Subdivision could not separate the zeros; report them as one cluster.
    out.push_back({cluster_centroid(gamma_, region.center(), diam, count), count});
  }

 private:
  const GammaFunction& gamma_;
  double cluster_size_;
};

int count_with_retry(const GammaFunction& gamma, double& radius, int points) {
  for (int attempt = 0;; ++attempt) {
    try {
      return count_zeros_argument(gamma, radius, points);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NearCircleZero || attempt >= 5) throw;
      radius *= 1.0 + 0.0137 * (attempt + 1);
    }
  }
}

}  // namespace

int count_zeros_argument(const GammaFunction& gamma, double radius, int points) {
  if (!(radius > 0.0)) fail(ErrorKind::InvalidInput, "contour radius must be positive");
  if (gamma.generator().is_blaschke() && !(radius < 1.0)) fail(ErrorKind::OutsideDomain, "contour radius must be below 1");
  if (points < 4) points = 4;
  const Path circle = [radius](double t) { return std::polar(radius, 2.0 * kPi * t); };
  return winding(gamma, circle, 0.0, 1.0, points);
}

std::vector<Root> find_zeros(const GammaFunction& gamma, double radius, int max_zeros, int contour_points) {
  if (gamma.exact()) {
    std::vector<Root> out;
    const ExactPoly& num = gamma.exact()->num();
    if (num.is_zero()) fail(ErrorKind::InvalidInput, "Gamma vanishes identically; zeros are not isolated");
    if (num.degree() >= 1)
      for (const auto& r : poly_roots(num).roots)
        if (std::abs(r.value) < radius) out.push_back(r);
    int total = 0;
    for (const auto& r : out) total += r.multiplicity;
    if (total > max_zeros) fail(ErrorKind::BudgetExceeded, std::to_string(total) + " zeros exceed the budget");
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return std::abs(a.value) < std::abs(b.value); });
    return out;
  }
  const int total = count_zeros_argument(gamma, radius, contour_points);
  if (total > max_zeros)
    fail(ErrorKind::BudgetExceeded, std::to_string(total) + " zeros inside radius " + std::to_string(radius) + " exceed the budget of " +
                                        std::to_string(max_zeros));
  if (total < 0) fail(ErrorKind::EvaluationFailure, "negative winding number; Gamma has poles in the disk");
  if (total == 0) return {};
  ZeroSearch search(gamma, 1e-4 * radius);
  double rho = 0.5 * radius;
  const int central = count_with_retry(gamma, rho, contour_points);
  std::vector<Root> out;
  if (central > 0) {
    std::vector<Root> found;
    const Region square{false, -rho, rho, -rho, rho};
    search.process(square, region_count(gamma, square, 24), found);
    for (const auto& r : found)
      if (std::abs(r.value) < rho) out.push_back(r);
  }
  if (total - central > 0) {
    std::vector<Root> found;
    const Region ring{true, rho, radius, -kPi + 0.0311, kPi + 0.0311};
    search.process(ring, total - central, found);
    for (const auto& r : found)
      if (std::abs(r.value) >= rho && std::abs(r.value) < radius) out.push_back(r);
  }
  int got = 0;
  for (const auto& r : out) got += r.multiplicity;
  if (got != total)
    fail(ErrorKind::Inconclusive, "zero search located " + std::to_string(got) + " of " + std::to_string(total) + " zeros");
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return std::abs(a.value) < std::abs(b.value); });
  return out;
}

}  // namespace fiberalg
