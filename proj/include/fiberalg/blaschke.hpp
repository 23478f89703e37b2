#pragma once

#include <complex>
#include <vector>

#include "fiberalg/rational_fn.hpp"
#include "fiberalg/roots.hpp"

namespace fiberalg {

using cplx = std::complex<double>;

/// Finite Blaschke product c * prod_j (a_j - z) / (1 - conj(a_j) z).
class BlaschkeProduct {
 public:
  static constexpr double kZeroMargin = 1e-12;
  static constexpr double kUnimodularTolerance = 1e-12;
  static constexpr double kDomainSlack = 1e-6;

  /// Throws InvalidInput unless every |a_j| < 1 - 1e-12 and |c| = 1 within 1e-12.
  explicit BlaschkeProduct(std::vector<cplx> zeros, cplx unimodular = 1.0);
  /// z^n; all zeros at the origin with c = (-1)^n.
  static BlaschkeProduct power(int n);

  int degree() const { return static_cast<int>(zeros_.size()); }
  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx unimodular() const { return c_; }
  bool vanishes_at_origin() const;

  /// prod (a_j - X), prod (1 - conj(a_j) X), so B = c N / D.
  const FloatPoly& numerator() const { return num_; }
  const FloatPoly& denominator() const { return den_; }
  ExactPoly exact_numerator() const;    // c N with exact coefficients
  ExactPoly exact_denominator() const;  // D with exact coefficients

  /// Throws OutsideDomain when |z| > 1 + 1e-6.
  cplx eval(cplx z) const;
  cplx operator()(cplx z) const { return eval(z); }
  cplx derivative_at(cplx z) const;
  /// B' as a rational function: c (N'D - ND') / D^2.
  FloatRational derivative() const;
  /// c N(X) - w D(X), whose roots are the fiber over w.
  FloatPoly fiber_polynomial(cplx w) const;

 private:
  void check_domain(cplx z) const;

  std::vector<cplx> zeros_;
  cplx c_;
  FloatPoly num_;
  FloatPoly den_;
};

/// The n preimages of B(base). points[0] is the base point itself.
struct Fiber {
  cplx base;
  std::vector<cplx> points;
  std::vector<std::vector<int>> groups;  // indices of numerically coincident points
  double residual = 0.0;                 // max |B(point) - B(base)|

  bool degenerate() const { return groups.size() < points.size(); }
  double min_separation() const;
  /// Points other than the base, i.e. points[1..n-1].
  std::vector<cplx> others() const { return {points.begin() + 1, points.end()}; }
};

struct FiberOptions {
  double cluster_tolerance = 1e-7;
  double leading_tolerance = 1e-14;
};

/// Throws OutsideDomain for |z| > 1, DegenerateLeading if the fiber polynomial
/// loses its degree.
Fiber fiber(const BlaschkeProduct& b, cplx z, const FiberOptions& opts = {});

/// Places base first (replacing the closest computed root by it exactly) and
/// groups coincident points.
Fiber assemble_fiber(cplx base, std::vector<cplx> roots, double cluster_tolerance);

/// prod_{j>=1} (z - phi_j), computed as B'(z) den(z) / lead(w); stable through
/// critical points.
cplx discriminant_d(const BlaschkeProduct& b, cplx z);

/// Critical points inside the disk and the data that decides membership in S0.
struct CriticalData {
  RootSet critical_points;       // zeros of B' in the open disk
  std::vector<cplx> critical_values;
  double s0_tolerance = 1e-8;

  /// z belongs to S0 (the union of fibers over critical values) within tolerance.
  bool in_s0(const BlaschkeProduct& b, cplx z) const;
};

CriticalData critical_data(const BlaschkeProduct& b, double s0_tolerance = 1e-8);

/// All points of S0: the fibers of the critical points.
std::vector<cplx> s0_points(const BlaschkeProduct& b, const CriticalData& data);

/// mu(w) = (a - w) / (1 - conj(a) w) for a zero a of B; B o mu vanishes at 0.
struct NormalizedBlaschke {
  BlaschkeProduct normalized;  // B o mu
  FloatRational mobius;        // mu; also its own inverse
  cplx moved_zero;
};

NormalizedBlaschke normalize_origin(const BlaschkeProduct& b);

/// Elementary symmetric polynomials e_0..e_n of the values.
std::vector<cplx> elementary_symmetric(const std::vector<cplx>& values);

/// Affine forms sigma_k = u_k + v_k w of the full fiber over w = B(z), and the
/// symmetric functions of the remaining n-1 points obtained by the recursion
/// sigma'_k = sigma_k - z sigma'_{k-1}.
struct SymmetricReduction {
  std::vector<cplx> u, v;           // sigma_k(w) = u[k] + v[k] * w, k = 0..n
  std::vector<cplx> recursion;      // sigma'_k(z, B(z)), k = 0..n-1
  std::vector<cplx> direct;         // elementary symmetric values of the supplied points
  double max_mismatch = 0.0;
};

/// Requires B(0) = 0. Throws InconsistentFiber when the recursion and the
/// supplied points disagree beyond tolerance.
SymmetricReduction symmetric_reduce(const BlaschkeProduct& b, cplx z, const std::vector<cplx>& other_points,
                                    double tolerance = 1e-8);

/// Fiber over e^{i theta}: the base point first, then the others by
/// increasing angle in (theta, theta + 2 pi).
std::vector<cplx> circular_fiber(const BlaschkeProduct& b, double theta);

}  // namespace fiberalg
