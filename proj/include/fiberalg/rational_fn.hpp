#pragma once

#include <complex>
#include <string>

#include "fiberalg/polynomial.hpp"

namespace fiberalg {

/// num/den with den nonzero. The exact backend keeps the pair reduced
/// (coprime, den monic).
template <Coefficient T>
class RationalFn {
 public:
  RationalFn() : num_(), den_(Polynomial<T>::constant(T(1))) {}
  RationalFn(Polynomial<T> num) : num_(std::move(num)), den_(Polynomial<T>::constant(T(1))) {}
  RationalFn(Polynomial<T> num, Polynomial<T> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorKind::InvalidInput, "rational function with zero denominator");
    reduce();
  }

  const Polynomial<T>& num() const { return num_; }
  const Polynomial<T>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  template <typename U>
  U operator()(const U& z) const {
    return poly_eval(num_, z) / poly_eval(den_, z);
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) fail(ErrorKind::InvalidInput, "rational division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend RationalFn operator-(const RationalFn& a) { return {-a.num_, a.den_}; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce() {
    if constexpr (ExactCoefficient<T>) {
      if (num_.is_zero()) {
        den_ = Polynomial<T>::constant(T(1));
        return;
      }
      auto g = poly_gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
      const T lead = den_.leading();
      num_ *= T(1) / lead;
      den_ *= T(1) / lead;
    }
  }

  Polynomial<T> num_;
  Polynomial<T> den_;
};

using FloatRational = RationalFn<std::complex<double>>;
using ExactRational = RationalFn<GaussianRational>;

/// r(s(x)) for exact rational functions.
ExactRational compose(const ExactRational& r, const ExactRational& s);

FloatRational to_float(const ExactRational& r);

}  // namespace fiberalg
