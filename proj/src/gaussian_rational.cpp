#include "fiberalg/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

#include "fiberalg/error.hpp"

namespace fiberalg {
namespace {

mpq_class parse_part(std::string_view s) {
  std::string text(s);
  auto bad = [&]() -> mpq_class { fail(ErrorKind::ParseError, "not a rational literal: '" + text + "'"); };
  if (text.empty()) return bad();
  if (text.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) return bad();
    if (q.get_den() == 0) return bad();
    q.canonicalize();
    return q;
  }
  // Decimal with optional exponent, converted exactly.
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_dot = false;
  for (; i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'); ++i) {
    if (text[i] == '.') {
      if (seen_dot) return bad();
      seen_dot = true;
    } else {
      digits.push_back(text[i]);
      if (seen_dot) --scale;
    }
  }
  if (digits.empty()) return bad();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return bad();
    try {
      std::size_t used = 0;
      scale += std::stol(text.substr(i + 1), &used);
      if (i + 1 + used != text.size()) return bad();
    } catch (const std::exception&) {
      return bad();
    }
  }
  mpz_class mant(digits, 10);
  mpq_class q(mant);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale < 0) q /= mpq_class(p10);
  else q *= mpq_class(p10);
  return neg ? mpq_class(-q) : q;
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_complex(std::complex<double> z) {
  return {mpq_class(z.real()), mpq_class(z.imag())};
}

GaussianRational GaussianRational::parse(std::string_view re, std::string_view im) {
  return {parse_part(re), parse_part(im)};
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  return "(" + re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + mpq_class(abs(im_)).get_str() + "i)";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) fail(ErrorKind::InvalidInput, "division by exact zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace fiberalg
