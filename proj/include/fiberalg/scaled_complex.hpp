#pragma once

#include <complex>
#include <cstdint>

namespace fiberalg {

/// mantissa * 2^exponent, for values whose modulus leaves the double range
/// (singular inner factors near the circle reach exp(-1000) and below).
class ScaledComplex {
 public:
  ScaledComplex() = default;
  ScaledComplex(std::complex<double> z) : mant_(z) { normalize(); }
  ScaledComplex(double x) : ScaledComplex(std::complex<double>(x, 0.0)) {}

  /// exp(w) without overflow or underflow of the modulus.
  static ScaledComplex exp(std::complex<double> w);

  bool is_zero() const { return mant_ == std::complex<double>(0.0, 0.0); }
  bool is_finite() const;
  /// Converts back to a double; may underflow to zero or overflow.
  std::complex<double> value() const;
  double log_abs() const;
  double arg() const { return std::arg(mant_); }
  std::complex<double> mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp_; }

  friend ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b);
  friend ScaledComplex operator/(const ScaledComplex& a, const ScaledComplex& b);
  friend ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b);
  friend ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b);
  friend ScaledComplex operator-(const ScaledComplex& a);
  ScaledComplex& operator*=(const ScaledComplex& o) { return *this = *this * o; }
  ScaledComplex& operator/=(const ScaledComplex& o) { return *this = *this / o; }
  ScaledComplex& operator+=(const ScaledComplex& o) { return *this = *this + o; }

 private:
  void normalize();
  std::complex<double> mant_{0.0, 0.0};
  std::int64_t exp_ = 0;
};

}  // namespace fiberalg
