#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "support.hpp"

using namespace fiberalg;
using namespace fiberalg::testing;

namespace {

ExactPoly odd_part_over_z(const ExactPoly& p) {
  // (p(z) - p(-z)) / (2z): the odd coefficients shifted down.
  std::vector<GaussianRational> c;
  for (int k = 1; k <= p.degree(); k += 2) {
    c.resize(static_cast<std::size_t>(k), GaussianRational(0));
    c[static_cast<std::size_t>(k - 1)] = p.coeff(static_cast<std::size_t>(k));
  }
  return ExactPoly(c);
}

std::vector<cplx> circle(double r, int n, double offset = 0.5) {
  std::vector<cplx> out;
  for (int k = 0; k < n; ++k) out.push_back(std::polar(r, 2.0 * std::numbers::pi * (k + offset) / n));
  return out;
}

}  // namespace

TEST(GammaEval, IdentityGivesOne) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const GammaFunction g(Generator(random_blaschke(rng, 2 + trial)), zpow(1));
    for (int k = 0; k < 100; ++k) EXPECT_LT(std::abs(g.eval(random_disk_point(rng)) - 1.0), 1e-10);
  }
}

TEST(GammaEval, SquareAndCube) {
  const GammaFunction g(zgen(2), zpow(3));
  std::mt19937 rng(42);
  for (int k = 0; k < 50; ++k) {
    const cplx z = random_disk_point(rng);
    EXPECT_LT(std::abs(gamma_eval(g, z) - z * z), 1e-12);
  }
}

TEST(GammaEval, GeneratorItselfGivesZero) {
  std::mt19937 rng(43);
  const BlaschkeProduct b = random_blaschke(rng, 3);
  const GammaFunction g(Generator(b), AnalyticOracle::blaschke(b));
  for (int k = 0; k < 50; ++k) EXPECT_LT(std::abs(g.eval(random_disk_point(rng))), 1e-12);
  ASSERT_TRUE(g.exact().has_value());
  EXPECT_TRUE(g.exact()->is_zero());
}

TEST(GammaEval, SingularInnerComposite) {
  // g = z chi(z^2) with B = z^2 gives chi(z^2).
  const AnalyticOracle chi2 = AnalyticOracle::compose(chi(), zpow(2));
  const GammaFunction g(zgen(2), AnalyticOracle::product({zpow(1), chi2}));
  EXPECT_FALSE(g.exact().has_value());
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 10; ++k) {
      const cplx z = std::polar(0.18 * (i + 0.5), 2.0 * std::numbers::pi * (k + 0.25) / 10);
      EXPECT_LT(std::abs(g.eval(z) - chi2.eval(z)), 1e-9);
    }
}

TEST(GammaEval, OutsideDomainRejected) {
  const GammaFunction g(zgen(2), zpow(3));
  try {
    g.eval(1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutsideDomain);
  }
}

TEST(GammaEval, OrderingIndependence) {
  std::mt19937 rng(44);
  const BlaschkeProduct b = random_blaschke(rng, 5);
  const AnalyticOracle f = AnalyticOracle::sum({zpow(3), AnalyticOracle::product({zpow(1), chi()})});
  for (int k = 0; k < 20; ++k) {
    const cplx z = random_disk_point(rng);
    std::vector<cplx> others = fiber(b, z).others();
    const cplx base = gamma_product(f, z, others).value();
    for (int s = 0; s < 5; ++s) {
      std::shuffle(others.begin(), others.end(), rng);
      EXPECT_LT(std::abs(gamma_product(f, z, others).value() - base), 1e-13 * std::max(1.0, std::abs(base)));
    }
  }
}

TEST(GammaEval, RemovableNearCriticalPoint) {
  const BlaschkeProduct b({cplx(0.0), cplx(0.5, 0.2), cplx(-0.3, 0.4)});
  const AnalyticOracle f = AnalyticOracle::sum({zpow(2), AnalyticOracle::product({zpow(1), chi()})});
  const GammaFunction g(Generator(b), f);
  const CriticalData cd = critical_data(b);
  for (const Root& c : cd.critical_points.roots) {
    for (double angle : {0.3, 2.0, 4.1}) {
      const cplx z = c.value + std::polar(1e-4, angle);
      const cplx mean = circle_mean([&](cplx p) { return gamma_eval(g, p); }, z, 1e-3, 64);
      EXPECT_LT(std::abs(gamma_eval(g, z) - mean), 1e-5);
    }
    // Inside the exclusion radius the averaged value stays continuous.
    EXPECT_LT(std::abs(gamma_eval(g, c.value) - gamma_eval(g, c.value + 1e-4)), 1e-3);
  }
}

TEST(GammaEval, BoundedNearCircle) {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 3; ++trial) {
    const GammaFunction g(Generator(random_blaschke(rng, 3)), AnalyticOracle::product({zpow(1), chi()}));
    double sup_n = 0.0, sup_2n = 0.0;
    for (cplx z : circle(0.999, 256)) sup_n = std::max(sup_n, std::abs(g.eval(z)));
    for (cplx z : circle(0.999, 512, 0.25)) sup_2n = std::max(sup_2n, std::abs(g.eval(z)));
    EXPECT_TRUE(std::isfinite(sup_n));
    EXPECT_LT(std::abs(sup_2n - sup_n), 0.05 * sup_2n + 1e-12);
  }
}

TEST(GammaExact, AgreesWithNumericEvaluation) {
  std::mt19937 rng(46);
  const BlaschkeProduct b({cplx(0.0), cplx(0.25, 0.5), cplx(-0.5, 0.0)}, cplx(0, 1));
  const AnalyticOracle f = AnalyticOracle::sum(
      {opoly({q(0), q(1), q(0), q(-2, 3)}), AnalyticOracle::rational(ExactPoly{q(1)}, ExactPoly{q(3), q(1)})});
  const GammaFunction g(Generator(b), f);
  ASSERT_TRUE(g.exact().has_value());
  const FloatRational ex = to_float(*g.exact());
  for (int k = 0; k < 200; ++k) {
    const cplx z = random_disk_point(rng);
    EXPECT_LT(std::abs(g.eval(z) - ex(z)), 1e-9);
  }
}

TEST(GammaExact, PolynomialPairSharpness) {
  for (const GaussianRational& a : {q(1, 2), q(1, 3), GaussianRational(mpq_class(1, 4), mpq_class(1, 4))}) {
    const ExactPoly p1{q(0), -a, q(1)};
    const ExactPoly p2{q(0), q(0), -a, q(1)};
    EXPECT_EQ(gamma_exact(p1, p2), p1);
    EXPECT_EQ(gamma_exact(Generator(p1), AnalyticOracle::poly(p2)).num(), p1);
  }
}

TEST(GammaExact, TwoPointFiberFormula) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const ExactPoly p = random_exact_poly(rng, 1 + trial % 6);
    const ExactRational r = gamma_exact(zgen(2), AnalyticOracle::poly(p));
    EXPECT_EQ(r.num(), odd_part_over_z(p));
    EXPECT_EQ(r.den(), ExactPoly::constant(q(1)));
  }
}

TEST(GammaExact, MonomialPairIsMonomial) {
  const ExactRational r = gamma_exact(zgen(5), zpow(3));
  EXPECT_EQ(r.den(), ExactPoly::constant(q(1)));
  ASSERT_EQ(r.num().degree(), 8);
  EXPECT_EQ(r.num().low_order(), 8);
  EXPECT_FALSE(r.num().leading().is_zero());
  // Numeric evaluation sees the same constant.
  const GammaFunction g(zgen(5), zpow(3));
  const cplx z(0.4, 0.3);
  EXPECT_LT(std::abs(g.eval(z) / std::pow(z, 8) - r.num().leading().to_complex()), 1e-9);
}

TEST(GammaExact, NotRational) {
  try {
    gamma_exact(zgen(2), AnalyticOracle::product({zpow(1), chi()}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRational);
  }
}

TEST(GammaWitness, CriticalDerivative) {
  const GammaFunction g(zgen(2), zpow(3));
  const Witness w = gamma_zero_witness(g, 0.0);
  EXPECT_EQ(w.kind, Witness::Kind::CriticalDerivative);
  EXPECT_LT(w.generator_gap, 1e-8);
  EXPECT_LT(w.g_gap, 1e-8);
}

TEST(GammaWitness, PartnerPoint) {
  const ExactPoly p1{q(0), q(-1, 2), q(1)}, p2{q(0), q(0), q(-1, 2), q(1)};
  const GammaFunction g(Generator(p1), AnalyticOracle::poly(p2));
  const Witness w = gamma_zero_witness(g, 0.0);
  EXPECT_EQ(w.kind, Witness::Kind::PartnerPoint);
  EXPECT_LT(std::abs(w.partner - 0.5), 1e-12);
}

TEST(GammaWitness, NotAZero) {
  const GammaFunction g(zgen(2), opoly({q(0), q(1), q(1)}));
  for (cplx z : {cplx(0.0), cplx(0.3, 0.1), cplx(-0.7)}) {
    try {
      gamma_zero_witness(g, z);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotAZero);
    }
  }
}

TEST(GammaScaling, Examples) {
  const GammaFunction g(zgen(2), zpow(3));
  const auto pts = circle(0.7, 32);
  const ScalingLawReport one = gamma_scaling_law_check(g, 1.0, AnalyticOracle::poly(ExactPoly{}), pts);
  EXPECT_EQ(one.homogeneity_error, 0.0);
  EXPECT_EQ(one.shift_error, 0.0);
  const ScalingLawReport two = gamma_scaling_law_check(g, 2.0, zpow(2), pts);
  EXPECT_LT(two.homogeneity_error, 1e-10);
  EXPECT_LT(two.shift_error, 1e-10);
  // Gamma(2g) = 2 Gamma(g) directly.
  const GammaFunction g2(zgen(2), AnalyticOracle::scale(q(2), zpow(3)));
  for (cplx z : pts) EXPECT_LT(std::abs(g2.eval(z) - 2.0 * g.eval(z)), 1e-12);
}

TEST(GammaScaling, HomogeneityAndShiftOnRandomInstances) {
  std::mt19937 rng(48);
  std::vector<cplx> grid;
  for (int k = 0; k < 40; ++k) grid.push_back(random_disk_point(rng, 0.9));
  for (int trial = 0; trial < 5; ++trial) {
    const GammaFunction g(Generator(random_blaschke(rng, 2 + trial)),
                          AnalyticOracle::sum({opoly({q(1), q(0), q(2), q(-1)}), AnalyticOracle::product({zpow(1), chi()})}));
    const ScalingLawReport r = gamma_scaling_law_check(g, cplx(0.5, -1.5), opoly({q(0), q(3), q(1, 2)}), grid);
    EXPECT_LT(r.homogeneity_error, 1e-10);
    EXPECT_LT(r.shift_error, 1e-10);
  }
}
