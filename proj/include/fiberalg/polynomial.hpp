#pragma once

#include <algorithm>
#include <complex>
#include <concepts>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fiberalg/error.hpp"
#include "fiberalg/gaussian_rational.hpp"

namespace fiberalg {

template <typename T>
concept Coefficient = std::same_as<T, std::complex<double>> || std::same_as<T, GaussianRational>;

/// Coefficient rings with exact arithmetic; gcd and exact division need one.
template <typename T>
concept ExactCoefficient = std::same_as<T, GaussianRational>;

/// Univariate polynomial, coefficients in ascending degree.
/// Trailing zero coefficients are dropped, so the zero polynomial has no coefficients.
template <Coefficient T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = v;
    return Polynomial(std::move(c));
  }
  /// The polynomial x.
  static Polynomial x() { return monomial(T(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }
  /// Number of vanishing low-order coefficients (multiplicity of the root at 0).
  int low_order() const {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && fiberalg::is_zero(c_[k])) ++k;
    return k;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    normalize();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (fiberalg::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    while (!c_.empty() && fiberalg::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using FloatPoly = Polynomial<std::complex<double>>;
using ExactPoly = Polynomial<GaussianRational>;

/// Horner evaluation.
template <Coefficient T, typename U>
U poly_eval(const Polynomial<T>& p, const U& z) {
  U acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + U(*it);
  return acc;
}

inline std::complex<double> poly_eval(const ExactPoly& p, const std::complex<double>& z) {
  std::complex<double> acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

template <Coefficient T>
Polynomial<T> derivative(const Polynomial<T>& p) {
  if (p.degree() < 1) return {};
  std::vector<T> out(p.coeffs().size() - 1, T(0));
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) out[k - 1] = p.coeffs()[k] * T(static_cast<int>(k));
  return Polynomial<T>(std::move(out));
}

template <Coefficient T>
Polynomial<T> pow(const Polynomial<T>& p, int e) {
  Polynomial<T> result = Polynomial<T>::constant(T(1));
  Polynomial<T> base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

/// p(q(x)).
template <Coefficient T>
Polynomial<T> compose(const Polynomial<T>& p, const Polynomial<T>& q) {
  Polynomial<T> acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial<T>::constant(*it);
  return acc;
}

/// Coefficients conjugated and reversed at the given formal degree: x^n conj(p(1/conj x)).
template <Coefficient T>
Polynomial<T> reciprocal(const Polynomial<T>& p, int formal_degree) {
  std::vector<T> out(static_cast<std::size_t>(formal_degree + 1), T(0));
  for (int k = 0; k <= formal_degree; ++k) out[k] = conj_coeff(p.coeff(static_cast<std::size_t>(formal_degree - k)));
  return Polynomial<T>(std::move(out));
}

/// Polynomial with the given roots, leading coefficient one.
template <Coefficient T>
Polynomial<T> from_roots(const std::vector<T>& roots) {
  Polynomial<T> p = Polynomial<T>::constant(T(1));
  for (const auto& r : roots) p *= Polynomial<T>{-r, T(1)};
  return p;
}

/// Quotient and remainder; division by the zero polynomial is rejected.
template <Coefficient T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidInput, "polynomial division by zero");
  std::vector<T> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<T>{}, a};
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - db + 1), T(0));
  const T lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const T q = rem[static_cast<std::size_t>(k + db)] / lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (is_zero(q)) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    rem[static_cast<std::size_t>(k + db)] = T(0);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(quo)), Polynomial<T>(std::move(rem))};
}

/// Exact quotient; a nonzero remainder is an internal inconsistency.
template <ExactCoefficient T>
Polynomial<T> exact_div(const Polynomial<T>& a, const Polynomial<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorKind::InvalidInput, "exact polynomial division left a remainder");
  return q;
}

template <ExactCoefficient T>
Polynomial<T> make_monic(const Polynomial<T>& p) {
  if (p.is_zero()) return p;
  return p * (T(1) / p.leading());
}

/// Monic greatest common divisor. Only the exact backend provides it.
template <ExactCoefficient T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

ExactPoly to_exact(const FloatPoly& p);
FloatPoly to_float(const ExactPoly& p);

/// Square-free factors s_1, s_2, ... with p = lc * prod s_i^i (index i-1 holds s_i).
std::vector<ExactPoly> squarefree_decomposition(const ExactPoly& p);

}  // namespace fiberalg

namespace fiberalg {

/// The float backend has no reliable gcd; always throws FloatBackend.
FloatPoly poly_gcd(const FloatPoly& a, const FloatPoly& b);

}  // namespace fiberalg
