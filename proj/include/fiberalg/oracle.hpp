#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "fiberalg/blaschke.hpp"
#include "fiberalg/rational_fn.hpp"
#include "fiberalg/scaled_complex.hpp"

namespace fiberalg {

struct OracleNode;

struct OracleLimits {
  int max_depth = 64;
  int max_size = 4096;
};

/// Value and first derivative at a point.
struct Jet {
  cplx value;
  cplx derivative;
};

/// Immutable expression tree for a bounded analytic function on the disk.
/// Copies share structure.
class AnalyticOracle {
 public:
  enum class Kind { Poly, Rational, Blaschke, SingularInner, Sum, Product, Scale, Compose };

  static AnalyticOracle poly(ExactPoly p);
  static AnalyticOracle poly(const FloatPoly& p);
  /// Throws InvalidInput for a zero denominator.
  static AnalyticOracle rational(ExactPoly num, ExactPoly den);
  static AnalyticOracle rational(const ExactRational& r) { return rational(r.num(), r.den()); }
  static AnalyticOracle blaschke(BlaschkeProduct b);
  /// exp(mass (z + point) / (z - point)); |point| = 1, mass > 0.
  static AnalyticOracle singular_inner(cplx point, double mass);
  static AnalyticOracle sum(std::vector<AnalyticOracle> terms);
  static AnalyticOracle product(std::vector<AnalyticOracle> factors);
  static AnalyticOracle scale(GaussianRational factor, AnalyticOracle child);
  static AnalyticOracle scale(cplx factor, AnalyticOracle child);
  /// outer(inner(z)); inner must map the disk into the disk for evaluation to succeed.
  static AnalyticOracle compose(AnalyticOracle outer, AnalyticOracle inner);

  Kind kind() const;
  int depth() const;
  int size() const;
  /// Throws InvalidInput when the tree exceeds the limits.
  void check_limits(const OracleLimits& limits = {}) const;

  /// Built only from polynomial, rational and Blaschke leaves.
  bool is_rational() const;
  /// Throws NotRational for trees containing singular inner factors.
  ExactRational to_exact_rational() const;

  /// Declared continuous up to the circle (needed for the disk-algebra mode).
  bool boundary_continuous() const;
  AnalyticOracle with_boundary_continuous(bool flag) const;

  /// Throws EvaluationFailure at poles and essential singularities.
  cplx eval(cplx z) const;
  cplx operator()(cplx z) const { return eval(z); }
  /// Extended-range evaluation for log-modulus and phase work.
  ScaledComplex eval_scaled(cplx z) const;
  /// Exact derivative for rational trees, central differences (h = 1e-6) otherwise.
  cplx derivative(cplx z) const;
  /// Value and derivative by forward-mode differentiation of the tree.
  Jet jet(cplx z) const;

  std::string describe() const;
  const OracleNode& node() const { return *node_; }

  // Structure access; each throws InvalidInput when called on another kind.
  /// Sum terms, product factors, {child} of a scale, {outer, inner} of a composition.
  std::vector<AnalyticOracle> children() const;
  const ExactPoly& poly_coeffs() const;
  const ExactPoly& rational_num() const;
  const ExactPoly& rational_den() const;
  const BlaschkeProduct& blaschke_leaf() const;
  cplx singular_point() const;
  double singular_mass() const;
  const GaussianRational& scale_factor() const;

 private:
  explicit AnalyticOracle(std::shared_ptr<const OracleNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const OracleNode> node_;
};

/// The map g generating the fibers: a finite Blaschke product, or a polynomial
/// (for pairs of polynomials, where fibers live in the whole plane).
class Generator {
 public:
  Generator(BlaschkeProduct b);
  Generator(ExactPoly p);
  Generator(const FloatPoly& p) : Generator(to_exact(p)) {}

  bool is_blaschke() const { return blaschke_ != nullptr; }
  const BlaschkeProduct& blaschke() const;
  const ExactPoly& exact_poly() const;
  int degree() const { return degree_; }

  cplx eval(cplx z) const;
  cplx operator()(cplx z) const { return eval(z); }
  cplx derivative_at(cplx z) const;
  /// Polynomial in X whose roots are the fiber over w.
  FloatPoly fiber_polynomial(cplx w) const;
  Fiber fiber(cplx z, const FiberOptions& opts = {}) const;
  /// prod_{j>=1} (z - phi_j(z)).
  cplx discriminant_d(cplx z) const;
  /// Critical points in the domain (the open disk for Blaschke products).
  std::vector<Root> critical_points() const;
  /// Points of every fiber that contains a critical point.
  std::vector<cplx> s0_points() const;
  AnalyticOracle as_oracle() const;
  /// Evaluation domain check: |z| <= 1 for Blaschke products, anywhere otherwise.
  bool in_domain(cplx z, double slack = 0.0) const;
  std::string describe() const;

 private:
  std::shared_ptr<const BlaschkeProduct> blaschke_;
  std::shared_ptr<const ExactPoly> poly_;
  FloatPoly fpoly_;
  int degree_ = 0;
};

}  // namespace fiberalg
