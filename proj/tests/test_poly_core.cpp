#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fiberalg/bivariate.hpp"
#include "fiberalg/roots.hpp"
#include "support.hpp"

using namespace fiberalg;
using namespace fiberalg::testing;

namespace {

cplx naive_eval(const FloatPoly& p, cplx z) {
  cplx acc(0);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) acc += p.coeffs()[k] * std::pow(z, static_cast<int>(k));
  return acc;
}

ExactBivariate random_bivariate(std::mt19937& rng, int dt, int dz) {
  std::vector<ExactPoly> c;
  for (int k = 0; k <= dt; ++k) c.push_back(random_exact_poly(rng, dz, 3));
  return ExactBivariate(c);
}

// Determinant by fraction-exact Gaussian elimination.
GaussianRational determinant(std::vector<std::vector<GaussianRational>> m) {
  const std::size_t n = m.size();
  GaussianRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return GaussianRational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const GaussianRational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Classical Sylvester matrix of two univariate polynomials (ascending input).
GaussianRational sylvester_resultant(const std::vector<GaussianRational>& p, const std::vector<GaussianRational>& q) {
  const std::size_t dp = p.size() - 1, dq = q.size() - 1, n = dp + dq;
  std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n, GaussianRational(0)));
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t k = 0; k <= dp; ++k) m[r][r + k] = p[dp - k];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t k = 0; k <= dq; ++k) m[dq + r][r + k] = q[dq - k];
  return determinant(m);
}

ExactBivariate t_minus(const ExactPoly& z_part) {
  return ExactBivariate({-z_part, ExactPoly::constant(GaussianRational(1))});
}

}  // namespace

TEST(PolyEval, Examples) {
  EXPECT_LT(std::abs(poly_eval(FloatPoly{1.0, 0.0, 1.0}, cplx(0, 1))), 1e-15);
  EXPECT_NEAR(std::abs(poly_eval(FloatPoly{0.0, 0.0, 0.0, 1.0}, cplx(0.5)) - 0.125), 0.0, 1e-15);
  const ExactPoly e{q(1), q(0), q(1)};
  EXPECT_TRUE(poly_eval(e, GaussianRational(0, 1)).is_zero());
}

TEST(PolyEval, MatchesPowerSum) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const FloatPoly p = random_float_poly(rng, 6);
    const cplx z = random_disk_point(rng, 1.0);
    EXPECT_LT(std::abs(poly_eval(p, z) - naive_eval(p, z)), 1e-13);
  }
}

TEST(PolyCore, ZeroPolynomialIsEmpty) {
  const ExactPoly z{q(0), q(0)};
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.coeffs().empty());
  EXPECT_EQ(z.degree(), -1);
  const ExactPoly p{q(1), q(2)};
  EXPECT_TRUE((p - p).coeffs().empty());
}

TEST(GaussianRationalTest, ParseAndExactConversion) {
  EXPECT_EQ(GaussianRational::parse("1/2", "-3"), GaussianRational(mpq_class(1, 2), mpq_class(-3)));
  EXPECT_EQ(GaussianRational::parse("0.25"), GaussianRational(mpq_class(1, 4)));
  EXPECT_EQ(GaussianRational::from_complex(cplx(0.1, 0)).real().get_d(), 0.1);
  const GaussianRational a(mpq_class(1, 3), mpq_class(2, 5));
  EXPECT_EQ(a * (GaussianRational(1) / a), GaussianRational(1));
  EXPECT_THROW(GaussianRational::parse("x"), Error);
}

TEST(PolyRoots, Examples) {
  const RootSet r = poly_roots(FloatPoly{1.0, 0.0, 1.0});
  ASSERT_EQ(r.roots.size(), 2u);
  std::vector<double> im;
  for (const Root& x : r.roots) {
    EXPECT_EQ(x.multiplicity, 1);
    EXPECT_LT(std::abs(x.value.real()), 1e-14);
    im.push_back(x.value.imag());
  }
  std::sort(im.begin(), im.end());
  EXPECT_NEAR(im[0], -1.0, 1e-14);
  EXPECT_NEAR(im[1], 1.0, 1e-14);

  const RootSet d = poly_roots(FloatPoly{0.09, -0.6, 1.0});
  ASSERT_EQ(d.roots.size(), 1u);
  EXPECT_EQ(d.roots[0].multiplicity, 2);
  EXPECT_LT(std::abs(d.roots[0].value - 0.3), 1e-7);

  const RootSet de = poly_roots(ExactPoly{q(9, 100), q(-6, 10), q(1)});
  ASSERT_EQ(de.roots.size(), 1u);
  EXPECT_EQ(de.roots[0].multiplicity, 2);
  EXPECT_LT(std::abs(de.roots[0].value - 0.3), 1e-14);
}

TEST(PolyRoots, ConstantRejected) {
  try {
    poly_roots(FloatPoly{2.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeZero);
  }
}

TEST(PolyRoots, PlantedDegreeEight) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<cplx> planted;
    while (planted.size() < 8) {
      const cplx r = random_disk_point(rng, 1.5);
      bool ok = true;
      for (cplx p : planted) ok = ok && std::abs(p - r) > 0.05;
      if (ok) planted.push_back(r);
    }
    const RootSet rs = poly_roots(from_roots(planted));
    ASSERT_EQ(rs.total_multiplicity(), 8);
    for (cplx p : planted) {
      double best = 1e9;
      for (cplx v : rs.values()) best = std::min(best, std::abs(v - p));
      EXPECT_LT(best, 1e-10);
    }
  }
}

TEST(PolyRoots, ReconstructionProperty) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const FloatPoly p = random_float_poly(rng, 1 + trial % 12);
    const RootSet rs = poly_roots(p);
    EXPECT_EQ(rs.total_multiplicity(), p.degree());
    const FloatPoly rebuilt = from_roots(rs.values()) * p.leading();
    double err = 0.0;
    for (int k = 0; k <= p.degree(); ++k) err = std::max(err, std::abs(rebuilt.coeff(k) - p.coeff(k)));
    EXPECT_LT(err, 1e-8);
  }
  // Exact square-free input: multiplicities from the exact decomposition.
  const ExactPoly e = from_roots(std::vector<GaussianRational>{q(1, 2), q(-1, 3), GaussianRational(0, 1)});
  const RootSet rs = poly_roots(e);
  EXPECT_EQ(rs.total_multiplicity(), 3);
  for (const Root& r : rs.roots) EXPECT_EQ(r.multiplicity, 1);
}

TEST(DiskZeroCount, Examples) {
  EXPECT_EQ(disk_zero_count(FloatPoly{0.0, -2.0, 1.0}, 1.0), 1);
  EXPECT_EQ(disk_zero_count(ExactPoly{q(0), q(-2), q(1)}, mpq_class(1)), 1);
  EXPECT_EQ(disk_zero_count(ExactPoly::monomial(q(1), 8), mpq_class(1)), 8);
  EXPECT_EQ(disk_zero_count(FloatPoly::monomial(1.0, 8), 1.0), 8);
  const ExactPoly p = from_roots(std::vector<GaussianRational>{q(1, 2), q(1, 2), q(3)});
  EXPECT_EQ(disk_zero_count(p, mpq_class(1)), 2);
  EXPECT_EQ(disk_zero_count(to_float(p), 1.0), 2);
}

TEST(DiskZeroCount, BoundaryRoot) {
  try {
    disk_zero_count(FloatPoly{-1.0, 1.0}, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundaryRoot);
  }
  try {
    disk_zero_count(ExactPoly{GaussianRational(0, -1), q(1)}, mpq_class(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundaryRoot);
  }
}

TEST(DiskZeroCount, SchurCohnMatchesFilteredRoots) {
  std::mt19937 rng(7);
  int checked = 0, singular = 0;
  while (checked < 500) {
    const int degree = 1 + static_cast<int>(rng() % 10);
    const ExactPoly p = random_exact_poly(rng, degree);
    const std::vector<cplx> roots = poly_root_values(to_float(p));
    const bool near_circle = std::any_of(roots.begin(), roots.end(), [](cplx r) { return std::abs(std::abs(r) - 1.0) < 1e-3; });
    if (near_circle) continue;
    const int filtered = static_cast<int>(std::count_if(roots.begin(), roots.end(), [](cplx r) { return std::abs(r) < 1.0; }));
    const int sc = schur_cohn_count(p, mpq_class(1));
    if (sc < 0) ++singular;
    EXPECT_EQ(disk_zero_count(p, mpq_class(1)), filtered);
    if (sc >= 0) {
      EXPECT_EQ(sc, filtered);
    }
    ++checked;
  }
  EXPECT_LT(singular, 50);
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(ExactPoly{q(-1), q(0), q(1)}, ExactPoly{q(-1), q(1)}), (ExactPoly{q(-1), q(1)}));
  EXPECT_EQ(poly_gcd(ExactPoly::monomial(q(1), 2), ExactPoly::monomial(q(1), 3)), ExactPoly::monomial(q(1), 2));
  EXPECT_EQ(poly_gcd(ExactPoly::monomial(q(4), 2), ExactPoly::monomial(q(2), 3)), ExactPoly::monomial(q(1), 2));
}

TEST(PolyGcd, DisjointRootSetsAreCoprime) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<GaussianRational> a, b;
    for (int k = 0; k < 4; ++k) a.emplace_back(mpq_class(2 * d(rng), 7), mpq_class(d(rng), 5));
    for (int k = 0; k < 4; ++k) b.emplace_back(mpq_class(2 * d(rng) + 1, 7), mpq_class(d(rng), 5));
    EXPECT_EQ(poly_gcd(from_roots(a), from_roots(b)), ExactPoly::constant(q(1)));
    const ExactPoly shared = from_roots(std::vector<GaussianRational>{a[0]});
    EXPECT_EQ(poly_gcd(from_roots(a), from_roots(b) * shared), shared);
  }
}

TEST(PolyGcd, FloatBackendRejected) {
  try {
    poly_gcd(FloatPoly{1.0, 1.0}, FloatPoly{1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FloatBackend);
  }
}

TEST(Squarefree, Decomposition) {
  const ExactPoly a{q(-1, 2), q(1)}, b{q(1, 3), q(1)}, c{q(0), q(1)};
  const ExactPoly p = a * pow(b, 2) * pow(c, 3) * q(5);
  const auto f = squarefree_decomposition(p);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(make_monic(f[0]), a);
  EXPECT_EQ(make_monic(f[1]), b);
  EXPECT_EQ(make_monic(f[2]), c);
}

TEST(Resultant, Examples) {
  const ExactPoly z = ExactPoly::x();
  const ExactPoly r1 = resultant_in_t(t_minus(z), t_minus(pow(z, 2)));
  const ExactPoly expect1{q(0), q(1), q(-1)};
  EXPECT_TRUE(r1 == expect1 || r1 == -expect1);

  const ExactBivariate t2_minus_z({-z, ExactPoly{}, ExactPoly::constant(q(1))});
  const ExactPoly r2 = resultant_in_t(t2_minus_z, t_minus(ExactPoly::constant(q(1))));
  const ExactPoly expect2{q(1), q(-1)};
  EXPECT_TRUE(r2 == expect2 || r2 == -expect2);

  const FloatPoly rf = resultant_in_t(FloatBivariate({FloatPoly{0.0, -1.0}, FloatPoly{1.0}}),
                                      FloatBivariate({FloatPoly{0.0, 0.0, -1.0}, FloatPoly{1.0}}));
  for (int k = 0; k <= 2; ++k) EXPECT_LT(std::abs(std::abs(rf.coeff(k)) - std::abs(expect1.coeff(k).to_complex())), 1e-12);
}

TEST(Resultant, ConstantInTRejected) {
  try {
    resultant_in_t(ExactBivariate::in_z(ExactPoly::x()), t_minus(ExactPoly::x()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeZero);
  }
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const ExactBivariate p = random_bivariate(rng, 1 + trial % 3, 2);
    const ExactBivariate qq = random_bivariate(rng, 1 + (trial / 3) % 3, 2);
    const ExactPoly r = resultant_in_t(p, qq);
    for (int s = 0; s < 3; ++s) {
      const GaussianRational z0(mpq_class(d(rng), 7), mpq_class(d(rng), 5));
      EXPECT_EQ(poly_eval(r, z0), sylvester_resultant(p.at_z(z0), qq.at_z(z0)));
    }
  }
}

TEST(Resultant, VanishesExactlyAtPlantedCommonRoots) {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const GaussianRational z0(mpq_class(static_cast<long>(rng() % 7) - 3, 4), mpq_class(1, 3));
    const GaussianRational a(mpq_class(static_cast<long>(rng() % 9) - 4, 5));
    const ExactBivariate lin = t_minus(ExactPoly::constant(a));
    const ExactBivariate zz = ExactBivariate::in_z(ExactPoly{-z0, q(1)});
    const ExactBivariate p = lin * random_bivariate(rng, 1, 1) + zz * random_bivariate(rng, 2, 1);
    const ExactBivariate qq = lin * random_bivariate(rng, 1, 1) + zz * random_bivariate(rng, 2, 1);
    const ExactPoly r = resultant_in_t(p, qq);
    EXPECT_TRUE(poly_eval(r, z0).is_zero());
    // Away from the planted point: nonzero resultant iff no shared root.
    for (int s = 0; s < 5; ++s) {
      const GaussianRational z1(mpq_class(static_cast<long>(rng() % 11) - 5, 3), mpq_class(static_cast<long>(rng() % 5), 7));
      if (z1 == z0) continue;
      const auto pa = p.at_z(z1), qa = qq.at_z(z1);
      if (pa.back().is_zero() || qa.back().is_zero()) continue;
      const ExactPoly g = poly_gcd(ExactPoly(pa), ExactPoly(qa));
      EXPECT_EQ(poly_eval(r, z1).is_zero(), g.degree() > 0);
    }
  }
}
