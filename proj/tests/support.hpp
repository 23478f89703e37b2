#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fiberalg/decompose.hpp"
#include "fiberalg/verdict.hpp"

namespace fiberalg::testing {

inline AnalyticOracle zpow(int k) { return AnalyticOracle::poly(ExactPoly::monomial(GaussianRational(1), k)); }

inline ExactPoly epoly(std::vector<GaussianRational> c) { return ExactPoly(std::move(c)); }

inline AnalyticOracle opoly(std::vector<GaussianRational> c) { return AnalyticOracle::poly(ExactPoly(std::move(c))); }

inline AnalyticOracle chi() { return AnalyticOracle::singular_inner(1.0, 1.0); }

inline Generator zgen(int n) { return Generator(BlaschkeProduct::power(n)); }

inline GaussianRational q(long p, long d = 1) { return GaussianRational(mpq_class(p, d)); }

inline cplx random_disk_point(std::mt19937& rng, double rmax = 0.95) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

inline BlaschkeProduct random_blaschke(std::mt19937& rng, int n, double rmax = 0.8) {
  std::vector<cplx> zeros;
  for (int k = 0; k < n; ++k) zeros.push_back(random_disk_point(rng, rmax));
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  return BlaschkeProduct(zeros, std::polar(1.0, u(rng)));
}

inline FloatPoly random_float_poly(std::mt19937& rng, int degree) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(g(rng), g(rng));
  return FloatPoly(c);
}

/// Small Gaussian-integer coefficients, leading coefficient nonzero.
inline ExactPoly random_exact_poly(std::mt19937& rng, int degree, int range = 5) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<GaussianRational> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(mpq_class(d(rng)), mpq_class(d(rng)));
  if (c.back().is_zero()) c.back() = GaussianRational(1);
  return ExactPoly(c);
}

/// Mean of f over the circle |z - c| = r.
template <typename F>
cplx circle_mean(F&& f, cplx c, double r, int points) {
  cplx acc(0);
  for (int k = 0; k < points; ++k) acc += f(c + std::polar(r, 2.0 * std::numbers::pi * (k + 0.5) / points));
  return acc / static_cast<double>(points);
}

struct CorpusEntry {
  std::string name;
  Generator b;
  AnalyticOracle g;
};

/// Rational (generator, g) pairs with known verdicts; shared by the verdict,
/// decomposition and acceptance checks.
inline std::vector<CorpusEntry> rational_corpus() {
  const BlaschkeProduct b2({cplx(0.0), cplx(0.5)}, -1.0);
  const BlaschkeProduct b3({cplx(0.0), cplx(0.5, 0.25), cplx(-0.4, 0.0)});
  const ExactPoly p1{q(0), q(-1, 2), q(1)};
  std::vector<CorpusEntry> c;
  c.push_back({"z^2 / z^3", zgen(2), zpow(3)});
  c.push_back({"z^5 / z^3", zgen(5), zpow(3)});
  c.push_back({"z^3 / z^4", zgen(3), zpow(4)});
  c.push_back({"z^2 / z^3+z", zgen(2), opoly({q(0), q(1), q(0), q(1)})});
  c.push_back({"z^4 / z^6", zgen(4), zpow(6)});
  c.push_back({"p1 / p2", Generator(p1), AnalyticOracle::poly(p1 * ExactPoly::x())});
  c.push_back({"b2 / z", Generator(b2), zpow(1)});
  c.push_back({"b3 / z^2+z^3/3", Generator(b3), opoly({q(0), q(0), q(1), q(1, 3)})});
  c.push_back({"z^2 / (z+2)/(z-3)", zgen(2), AnalyticOracle::rational(ExactPoly{q(2), q(1)}, ExactPoly{q(-3), q(1)})});
  c.push_back({"b2 / b2^2+z^3", Generator(b2),
               AnalyticOracle::sum({AnalyticOracle::product({AnalyticOracle::blaschke(b2), AnalyticOracle::blaschke(b2)}), zpow(3)})});
  return c;
}

/// Non-rational entries (singular inner factors).
inline std::vector<CorpusEntry> oracle_corpus() {
  const AnalyticOracle chi2 = AnalyticOracle::compose(chi(), zpow(2));
  std::vector<CorpusEntry> c;
  c.push_back({"z^2 / chi", zgen(2), chi()});
  c.push_back({"z^2 / z chi(z^2)", zgen(2), AnalyticOracle::product({zpow(1), chi2})});
  c.push_back({"z^3 / z + chi/4", zgen(3), AnalyticOracle::sum({zpow(1), AnalyticOracle::scale(q(1, 4), chi())})});
  return c;
}

struct DecompositionTriple {
  std::string name;
  Generator b;
  AnalyticOracle g;
  AnalyticOracle f;
};

/// 20 (generator, g, f) triples with rational g and Gamma not identically zero.
inline std::vector<DecompositionTriple> decomposition_corpus() {
  std::vector<CorpusEntry> pairs;
  for (auto& e : rational_corpus())
    if (e.name != "z^4 / z^6") pairs.push_back(e);
  const std::vector<std::pair<std::string, AnalyticOracle>> fs{
      {"1", opoly({q(1)})},
      {"quintic", opoly({q(1, 2), q(-1), q(0), GaussianRational(mpq_class(2), mpq_class(1)), q(0), q(-1, 3)})},
      {"z chi", AnalyticOracle::product({zpow(1), chi()})},
      {"1/(z-2)", AnalyticOracle::rational(ExactPoly{q(1)}, ExactPoly{q(-2), q(1)})},
  };
  std::vector<DecompositionTriple> out;
  for (std::size_t i = 0; i < 20; ++i) {
    const auto& p = pairs[i % pairs.size()];
    const auto& f = fs[(i + i / pairs.size()) % fs.size()];
    out.push_back({p.name + " | f=" + f.first, p.b, p.g, f.second});
  }
  return out;
}

}  // namespace fiberalg::testing
