#pragma once

#include <complex>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fiberalg {

/// Exact complex number re + i*im with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(mpq_class re, mpq_class im = 0);
  GaussianRational(long value) : re_(value), im_(0) {}
  GaussianRational(int value) : re_(value), im_(0) {}

  /// Exact conversion of the binary doubles; no rounding.
  static GaussianRational from_complex(std::complex<double> z);
  /// Accepts "p", "p/q" or decimal literals for each part.
  static GaussianRational parse(std::string_view re, std::string_view im = "0");

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Coefficient traits shared by the float and exact polynomial backends.
inline bool is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0, 0.0); }
inline bool is_zero(const GaussianRational& c) { return c.is_zero(); }
inline std::complex<double> to_complex(const std::complex<double>& c) { return c; }
inline std::complex<double> to_complex(const GaussianRational& c) { return c.to_complex(); }
inline std::complex<double> conj_coeff(const std::complex<double>& c) { return std::conj(c); }
inline GaussianRational conj_coeff(const GaussianRational& c) { return c.conj(); }

}  // namespace fiberalg
