#pragma once

#include <vector>

#include "fiberalg/polynomial.hpp"

namespace fiberalg {

/// Polynomial in t whose coefficients are polynomials in z: sum_k c_k(z) t^k.
template <Coefficient T>
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(std::vector<Polynomial<T>> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  /// p(t), constant in z.
  static BivariatePoly in_t(const Polynomial<T>& p) {
    std::vector<Polynomial<T>> c;
    for (const auto& v : p.coeffs()) c.push_back(Polynomial<T>::constant(v));
    return BivariatePoly(std::move(c));
  }
  /// p(z), constant in t.
  static BivariatePoly in_z(const Polynomial<T>& p) { return BivariatePoly({p}); }

  bool is_zero() const { return c_.empty(); }
  int degree_t() const { return static_cast<int>(c_.size()) - 1; }
  int degree_z() const {
    int d = -1;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
  }
  const std::vector<Polynomial<T>>& coeffs() const { return c_; }
  Polynomial<T> coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Polynomial<T>{}; }
  Polynomial<T> leading_t() const { return c_.empty() ? Polynomial<T>{} : c_.back(); }

  /// Specialize z, leaving a polynomial in t.
  template <typename U>
  std::vector<U> at_z(const U& z) const {
    std::vector<U> out;
    for (const auto& c : c_) out.push_back(poly_eval(c, z));
    return out;
  }

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    std::vector<Polynomial<T>> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return BivariatePoly(std::move(c));
  }
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    std::vector<Polynomial<T>> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return BivariatePoly(std::move(c));
  }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Polynomial<T>> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return BivariatePoly(std::move(c));
  }
  friend BivariatePoly operator-(const BivariatePoly& a) { return BivariatePoly{} - a; }

 private:
  std::vector<Polynomial<T>> c_;
};

using FloatBivariate = BivariatePoly<std::complex<double>>;
using ExactBivariate = BivariatePoly<GaussianRational>;

/// Resultant with respect to t, a polynomial in z. Exact input uses fraction-free
/// elimination; float input evaluates on the unit circle and interpolates.
/// Throws DegreeZero when either argument is constant in t.
ExactPoly resultant_in_t(const ExactBivariate& p, const ExactBivariate& q);
FloatPoly resultant_in_t(const FloatBivariate& p, const FloatBivariate& q);

/// Quotient of p(t, z) by (t - z); throws InvalidInput if the division is not exact.
ExactBivariate divide_by_t_minus_z(const ExactBivariate& p);

}  // namespace fiberalg
