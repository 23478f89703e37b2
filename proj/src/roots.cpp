#include "fiberalg/roots.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>

namespace fiberalg {
namespace {

using cd = std::complex<double>;

std::pair<cd, cd> eval_with_derivative(const FloatPoly& p, cd z) {
  cd v(0), d(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  return {v, d};
}

std::vector<cd> eigen_roots(const FloatPoly& p) {
  const int n = p.degree();
  if (n == 1) return {-p.coeffs()[0] / p.coeffs()[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  const cd lead = p.leading();
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeffs()[static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) fail(ErrorKind::EvaluationFailure, "companion eigenvalue iteration did not converge");
  std::vector<cd> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

cd polish(const FloatPoly& p, cd z, int passes) {
  for (int k = 0; k < passes; ++k) {
    auto [v, d] = eval_with_derivative(p, z);
    if (v == cd(0) || d == cd(0)) break;
    const cd next = z - v / d;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
    if (std::abs(poly_eval(p, next)) > std::abs(v)) break;
    z = next;
  }
  return z;
}

std::vector<Root> cluster(const std::vector<cd>& values, double tol) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = std::max({1.0, std::abs(values[i]), std::abs(values[j])});
      if (std::abs(values[i] - values[j]) <= tol * scale) parent[find(i)] = find(j);
    }
  std::vector<Root> out;
  std::vector<std::size_t> slot(n, n);
  std::vector<cd> sums;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.push_back({0.0, 0});
      sums.push_back(0.0);
    }
    out[slot[r]].multiplicity += 1;
    sums[slot[r]] += values[i];
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k].value = sums[k] / static_cast<double>(out[k].multiplicity);
  return out;
}

void require_positive_degree(int degree) {
  if (degree < 1) fail(ErrorKind::DegreeZero, "root finding needs a polynomial of degree at least one");
}

}  // namespace

int RootSet::total_multiplicity() const {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

std::vector<std::complex<double>> RootSet::values() const {
  std::vector<cd> out;
  for (const auto& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

std::vector<std::complex<double>> poly_root_values(const FloatPoly& p, const RootOptions& opts) {
  require_positive_degree(p.degree());
  const int zeros = p.low_order();
  std::vector<cd> out(static_cast<std::size_t>(zeros), cd(0));
  if (zeros == p.degree()) return out;
  const FloatPoly q(std::vector<cd>(p.coeffs().begin() + zeros, p.coeffs().end()));
  // Substitute x = s y with s the geometric mean root modulus, so that tiny
  // clusters (x^n - w, small w) are not swamped by eigenvalue noise.
  const int d = q.degree();
  double s = std::pow(std::abs(q.coeff(0)) / std::abs(q.leading()), 1.0 / d);
  if (!std::isfinite(s) || s <= 0.0) s = 1.0;
  std::vector<cd> scaled(q.coeffs());
  double sk = 1.0;
  for (auto& c : scaled) {
    c *= sk;
    sk *= s;
  }
  for (cd r : eigen_roots(FloatPoly(std::move(scaled)))) out.push_back(polish(q, s * r, opts.newton_passes));
  return out;
}

RootSet poly_roots(const FloatPoly& p, const RootOptions& opts) {
  RootSet set;
  auto values = poly_root_values(p, opts);
  set.roots = cluster(values, opts.cluster_tolerance);
  for (const auto& r : set.roots) set.residual = std::max(set.residual, std::abs(poly_eval(p, r.value)));
  return set;
}

RootSet poly_roots(const ExactPoly& p, const RootOptions& opts) {
  require_positive_degree(p.degree());
  RootSet set;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    const FloatPoly f = to_float(factors[i]);
    for (cd v : poly_root_values(f, opts)) set.roots.push_back({v, static_cast<int>(i) + 1});
  }
  const FloatPoly pf = to_float(p);
  for (const auto& r : set.roots) set.residual = std::max(set.residual, std::abs(poly_eval(pf, r.value)));
  return set;
}

int disk_zero_count(const FloatPoly& p, double radius, double boundary_tolerance) {
  if (p.is_zero()) fail(ErrorKind::InvalidInput, "the zero polynomial has no finite zero count");
  if (p.degree() == 0) return 0;
  int count = 0;
  for (cd r : poly_root_values(p)) {
    const double gap = std::abs(r) - radius;
    if (std::abs(gap) <= boundary_tolerance * std::max(1.0, radius))
      fail(ErrorKind::BoundaryRoot, "root within tolerance of the circle |z| = " + std::to_string(radius));
    if (gap < 0) ++count;
  }
  return count;
}

int schur_cohn_count(const ExactPoly& p, const mpq_class& radius) {
  if (p.is_zero()) fail(ErrorKind::InvalidInput, "the zero polynomial has no finite zero count");
  int count = p.low_order();
  // Scale to the unit circle: a_k r^k.
  std::vector<GaussianRational> a(p.coeffs().begin() + count, p.coeffs().end());
  mpq_class rk = 1;
  for (auto& c : a) {
    c *= GaussianRational(rk);
    rk *= radius;
  }
  // f_{j+1} = conj(c_0) f_j - c_d f_j^*, formal degree drops by one each step;
  // zeros inside equal the number of negative partial products of the deltas.
  int sign = 1;
  while (a.size() > 1) {
    const std::size_t d = a.size() - 1;
    const GaussianRational c0 = a[0];
    const GaussianRational cd_ = a[d];
    const mpq_class delta = c0.norm() - cd_.norm();
    if (sgn(delta) == 0) return -1;
    sign *= sgn(delta);
    if (sign < 0) ++count;
    std::vector<GaussianRational> next(d);
    const GaussianRational c0c = c0.conj();
    for (std::size_t k = 0; k < d; ++k) next[k] = c0c * a[k] - cd_ * a[d - k].conj();
    a = std::move(next);
  }
  return count;
}

int disk_zero_count(const ExactPoly& p, const mpq_class& radius, double boundary_tolerance) {
  if (p.is_zero()) fail(ErrorKind::InvalidInput, "the zero polynomial has no finite zero count");
  if (sgn(radius) <= 0) fail(ErrorKind::InvalidInput, "radius must be positive");
  const int sc = schur_cohn_count(p, radius);
  if (sc >= 0) return sc;
  return disk_zero_count(to_float(p), radius.get_d(), boundary_tolerance);
}

}  // namespace fiberalg
