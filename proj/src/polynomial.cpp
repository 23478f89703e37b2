#include "fiberalg/polynomial.hpp"

#include "fiberalg/rational_fn.hpp"

namespace fiberalg {

ExactPoly to_exact(const FloatPoly& p) {
  std::vector<GaussianRational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(GaussianRational::from_complex(v));
  return ExactPoly(std::move(c));
}

FloatPoly to_float(const ExactPoly& p) {
  std::vector<std::complex<double>> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.to_complex());
  return FloatPoly(std::move(c));
}

FloatPoly poly_gcd(const FloatPoly&, const FloatPoly&) {
  fail(ErrorKind::FloatBackend, "gcd requires exact coefficients; convert with to_exact");
}

std::vector<ExactPoly> squarefree_decomposition(const ExactPoly& p) {
  std::vector<ExactPoly> out;
  if (p.degree() < 1) return out;
  // Yun's algorithm on the monic input.
  const ExactPoly f = make_monic(p);
  const ExactPoly fp = derivative(f);
  ExactPoly a = poly_gcd(f, fp);
  ExactPoly b = exact_div(f, a);
  ExactPoly c = exact_div(fp, a);
  ExactPoly d = c - derivative(b);
  while (b.degree() > 0) {
    ExactPoly s = poly_gcd(b, d);
    out.push_back(s);
    b = exact_div(b, s);
    c = exact_div(d, s);
    d = c - derivative(b);
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

namespace {

// Numerator and denominator of r(s) at a common power of s's denominator.
ExactPoly homogenize(const ExactPoly& a, const ExactRational& s, int degree) {
  ExactPoly acc;
  ExactPoly num_pow = ExactPoly::constant(1);
  for (int k = 0; k <= degree; ++k) {
    const auto c = a.coeff(static_cast<std::size_t>(k));
    if (!c.is_zero()) acc += num_pow * pow(s.den(), degree - k) * c;
    num_pow *= s.num();
  }
  return acc;
}

}  // namespace

ExactRational compose(const ExactRational& r, const ExactRational& s) {
  const int da = std::max(r.num().degree(), 0);
  const int db = std::max(r.den().degree(), 0);
  const int d = std::max(da, db);
  ExactPoly num = homogenize(r.num(), s, d);
  ExactPoly den = homogenize(r.den(), s, d);
  return {num, den};
}

FloatRational to_float(const ExactRational& r) { return {to_float(r.num()), to_float(r.den())}; }

}  // namespace fiberalg
