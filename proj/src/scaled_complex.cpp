#include "fiberalg/scaled_complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fiberalg {

void ScaledComplex::normalize() {
  const double m = std::max(std::abs(mant_.real()), std::abs(mant_.imag()));
  if (m == 0.0 || !std::isfinite(m)) {
    if (m == 0.0) exp_ = 0;
    return;
  }
  int e = 0;
  std::frexp(m, &e);
  mant_ = {std::ldexp(mant_.real(), -e), std::ldexp(mant_.imag(), -e)};
  exp_ += e;
}

ScaledComplex ScaledComplex::exp(std::complex<double> w) {
  ScaledComplex out;
  const double k = std::floor(w.real() / std::numbers::ln2);
  const double rest = w.real() - k * std::numbers::ln2;
  out.mant_ = std::polar(std::exp(rest), w.imag());
  out.exp_ = static_cast<std::int64_t>(k);
  out.normalize();
  return out;
}

bool ScaledComplex::is_finite() const { return std::isfinite(mant_.real()) && std::isfinite(mant_.imag()); }

std::complex<double> ScaledComplex::value() const {
  if (is_zero()) return 0.0;
  const std::int64_t e = std::clamp<std::int64_t>(exp_, -4000, 4000);
  const int ei = static_cast<int>(e);
  return {std::ldexp(mant_.real(), ei), std::ldexp(mant_.imag(), ei)};
}

double ScaledComplex::log_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log(std::abs(mant_)) + static_cast<double>(exp_) * std::numbers::ln2;
}

ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
  ScaledComplex out;
  out.mant_ = a.mant_ * b.mant_;
  out.exp_ = out.mant_ == std::complex<double>(0.0, 0.0) ? 0 : a.exp_ + b.exp_;
  out.normalize();
  return out;
}

ScaledComplex operator/(const ScaledComplex& a, const ScaledComplex& b) {
  ScaledComplex out;
  out.mant_ = a.mant_ / b.mant_;
  out.exp_ = out.mant_ == std::complex<double>(0.0, 0.0) ? 0 : a.exp_ - b.exp_;
  out.normalize();
  return out;
}

ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const bool a_big = a.exp_ >= b.exp_;
  const ScaledComplex& big = a_big ? a : b;
  const ScaledComplex& small = a_big ? b : a;
  const std::int64_t shift = big.exp_ - small.exp_;
  ScaledComplex out;
  out.exp_ = big.exp_;
  if (shift > 1100) {
    out.mant_ = big.mant_;
  } else {
    const int s = static_cast<int>(-shift);
    out.mant_ = big.mant_ + std::complex<double>(std::ldexp(small.mant_.real(), s), std::ldexp(small.mant_.imag(), s));
  }
  if (out.mant_ == std::complex<double>(0.0, 0.0)) out.exp_ = 0;
  out.normalize();
  return out;
}

ScaledComplex operator-(const ScaledComplex& a) {
  ScaledComplex out = a;
  out.mant_ = -out.mant_;
  return out;
}

ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) { return a + (-b); }

}  // namespace fiberalg
