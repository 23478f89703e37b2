#pragma once

#include <optional>
#include <vector>

#include "fiberalg/bivariate.hpp"
#include "fiberalg/oracle.hpp"

namespace fiberalg {

struct GammaSettings {
  double exclusion_radius = 1e-5;  // distance to S0 below which values are averaged
  double averaging_radius = 1e-4;
  int averaging_points = 8;
  FiberOptions fiber;
  bool compute_exact = true;  // build the exact rational form when g is rational
};

/// Gamma(g)(z) = prod_{j>=1} (g(z) - g(phi_j(z))) / (z - phi_j(z)) over the fiber of
/// the generator through z.
class GammaFunction {
 public:
  GammaFunction(Generator generator, AnalyticOracle g, GammaSettings settings = {});

  const Generator& generator() const { return gen_; }
  const AnalyticOracle& g() const { return g_; }
  const GammaSettings& settings() const { return settings_; }
  int degree() const { return gen_.degree(); }
  /// Present exactly when g is rational and compute_exact was requested.
  const std::optional<ExactRational>& exact() const { return exact_; }
  const std::vector<cplx>& s0_points() const { return s0_; }
  double distance_to_s0(cplx z) const;

  /// Throws OutsideDomain for |z| > 1 with a Blaschke generator.
  cplx eval(cplx z) const;
  cplx operator()(cplx z) const { return eval(z); }
  ScaledComplex eval_scaled(cplx z) const;
  /// Central difference with step 1e-6 (exact when the rational form is present).
  cplx derivative(cplx z) const;

 private:
  ScaledComplex direct(cplx z) const;

  Generator gen_;
  AnalyticOracle g_;
  GammaSettings settings_;
  std::optional<ExactRational> exact_;
  std::vector<cplx> s0_;
};

/// Point evaluation; near S0 the value is the mean over a small circle.
cplx gamma_eval(const GammaFunction& gamma, cplx z);

/// The product over the given fiber points, in extended range.
ScaledComplex gamma_product(const AnalyticOracle& g, cplx z, const std::vector<cplx>& others);

/// N(t) D(z) - N(z) D(t) for B = N / D, or p(t) - p(z) for a polynomial.
ExactBivariate fiber_relation(const Generator& generator);

/// Exact Gamma(g) as a reduced rational function, by resultants. Throws NotRational.
ExactRational gamma_exact(const Generator& generator, const AnalyticOracle& g);
/// Gamma_p(q) for polynomials p, q; always a polynomial.
ExactPoly gamma_exact(const ExactPoly& p, const ExactPoly& q);

struct WitnessSettings {
  double zero_tolerance = 1e-8;     // |Gamma(z0)| accepted as a zero
  double witness_tolerance = 1e-6;  // gaps accepted as coincidences
  double distinct_tolerance = 1e-6; // partner must differ from z0 by more than this
};

/// Why Gamma vanishes at z0.
struct Witness {
  enum class Kind { PartnerPoint, CriticalDerivative };
  Kind kind;
  cplx zero;
  cplx partner;            // PartnerPoint only
  double generator_gap;    // |B(partner) - B(z0)| or |B'(z0)|
  double g_gap;            // |g(partner) - g(z0)| or |g'(z0)|
};

/// Throws NotAZero when |Gamma(z0)| is above tolerance, NoWitness when neither
/// case holds.
Witness gamma_zero_witness(const GammaFunction& gamma, cplx z0, const WitnessSettings& settings = {});

struct ScalingLawReport {
  double homogeneity_error = 0.0;  // max |Gamma(cg) - c^{n-1} Gamma(g)|, relative
  double shift_error = 0.0;        // max |Gamma(g + h o B) - Gamma(g)|, relative
};

ScalingLawReport gamma_scaling_law_check(const GammaFunction& gamma, cplx c, const AnalyticOracle& h,
                                         const std::vector<cplx>& points);

}  // namespace fiberalg
