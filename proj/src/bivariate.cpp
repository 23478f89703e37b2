#include "fiberalg/bivariate.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>

namespace fiberalg {
namespace {

template <typename E, typename Coeffs>
std::vector<std::vector<E>> sylvester(const Coeffs& p, const Coeffs& q, const E& zero) {
  const int m = static_cast<int>(p.size()) - 1;
  const int n = static_cast<int>(q.size()) - 1;
  const int size = m + n;
  std::vector<std::vector<E>> s(static_cast<std::size_t>(size), std::vector<E>(static_cast<std::size_t>(size), zero));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = p[static_cast<std::size_t>(m - k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = q[static_cast<std::size_t>(n - k)];
  return s;
}

template <Coefficient T>
void require_t_degree(const BivariatePoly<T>& p, const BivariatePoly<T>& q) {
  if (p.degree_t() < 1 || q.degree_t() < 1)
    fail(ErrorKind::DegreeZero, "resultant in t needs both arguments of positive degree in t");
}

}  // namespace

ExactPoly resultant_in_t(const ExactBivariate& p, const ExactBivariate& q) {
  require_t_degree(p, q);
  auto m = sylvester<ExactPoly>(p.coeffs(), q.coeffs(), ExactPoly{});
  const std::size_t n = m.size();
  // Bareiss fraction-free elimination; every division below is exact.
  ExactPoly prev = ExactPoly::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return {};
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ExactPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = v.is_zero() ? v : exact_div(v, prev);
      }
      m[i][k] = ExactPoly{};
    }
    prev = m[k][k];
  }
  ExactPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

FloatPoly resultant_in_t(const FloatBivariate& p, const FloatBivariate& q) {
  require_t_degree(p, q);
  using cd = std::complex<double>;
  const int degree_bound = q.degree_t() * std::max(p.degree_z(), 0) + p.degree_t() * std::max(q.degree_z(), 0);
  const int points = degree_bound + 1;
  const int size = p.degree_t() + q.degree_t();
  std::vector<cd> values(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const cd z = std::polar(1.0, 2.0 * std::numbers::pi * k / points);
    const auto s = sylvester<cd>(p.at_z(z), q.at_z(z), cd(0));
    Eigen::MatrixXcd mat(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) mat(i, j) = s[i][j];
    values[static_cast<std::size_t>(k)] = mat.partialPivLu().determinant();
  }
  std::vector<cd> coeffs(static_cast<std::size_t>(points));
  double scale = 0.0;
  for (int j = 0; j < points; ++j) {
    cd acc(0);
    for (int k = 0; k < points; ++k)
      acc += values[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * std::numbers::pi * double(j) * k / points);
    coeffs[static_cast<std::size_t>(j)] = acc / double(points);
    scale = std::max(scale, std::abs(coeffs[static_cast<std::size_t>(j)]));
  }
  // Interpolation noise above the true degree.
  for (auto& c : coeffs)
    if (std::abs(c) <= 1e-13 * scale) c = 0.0;
  return FloatPoly(std::move(coeffs));
}

ExactBivariate divide_by_t_minus_z(const ExactBivariate& p) {
  if (p.is_zero()) return {};
  const int n = p.degree_t();
  if (n == 0) fail(ErrorKind::InvalidInput, "t - z does not divide a nonzero polynomial constant in t");
  const ExactPoly z = ExactPoly::x();
  std::vector<ExactPoly> b(static_cast<std::size_t>(n));
  b[static_cast<std::size_t>(n - 1)] = p.coeff(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 1; --k) b[static_cast<std::size_t>(k - 1)] = p.coeff(static_cast<std::size_t>(k)) + z * b[static_cast<std::size_t>(k)];
  const ExactPoly remainder = p.coeff(0) + z * b[0];
  if (!remainder.is_zero()) fail(ErrorKind::InvalidInput, "t - z does not divide the polynomial");
  return ExactBivariate(std::move(b));
}

}  // namespace fiberalg
