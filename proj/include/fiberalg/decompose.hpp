#pragma once

#include <climits>
#include <functional>
#include <vector>

#include "fiberalg/gamma.hpp"

namespace fiberalg {

struct DecomposeSettings {
  double critical_separation = 1e-6;  // min fiber distance for lagrange_coeffs
  double collapse_separation = 1e-7;  // min distance of g-values for the raw formula
  int threads = 1;
};

/// Coefficients of L_z(X) = sum_j f(phi_j) prod_{l != j} (X - g(phi_l)) / (phi_j - phi_l)
/// in the monomial basis, so that f(z) Gamma(g)(z) = sum_k A_k(z) g(z)^k.
struct DecompositionSample {
  cplx z;
  std::vector<cplx> coeffs;  // A_0 .. A_{n-1}
  double residual = 0.0;     // |f(z) Gamma(z) - sum_k A_k g(z)^k|
  double g_separation = 0.0; // min |g(phi_j) - g(phi_l)|, j != l
};

/// Throws NearCriticalPoint when two fiber points are closer than the critical separation.
DecompositionSample lagrange_coeffs(const GammaFunction& gamma, const AnalyticOracle& f, cplx z,
                                    const DecomposeSettings& settings = {});
DecompositionSample lagrange_coeffs(const Generator& b, const AnalyticOracle& g, const AnalyticOracle& f, cplx z);

/// sum_j h(phi_j) prod_{l != j} (X - g(phi_l)) / (g(phi_j) - g(phi_l)) with h = f Gamma(g).
/// Throws NearDegenerate when the g-values of the fiber collapse.
std::vector<cplx> raw_lagrange_coeffs(const GammaFunction& gamma, const AnalyticOracle& f, cplx z,
                                      const DecomposeSettings& settings = {});

/// prod_l (X - r_l) in ascending coefficients.
std::vector<cplx> expand_roots(const std::vector<cplx>& roots);

struct DecompositionReport {
  double max_residual = 0.0;
  double mean_residual = 0.0;
  int evaluated = 0;
  int skipped = 0;         // points near S0
  int near_degenerate = 0; // points whose fiber g-values collapse
  double max_coeff = 0.0;  // max |A_k| over evaluated samples; sampled evidence of boundedness only
  std::vector<DecompositionSample> samples;
};

DecompositionReport verify_decomposition(const GammaFunction& gamma, const AnalyticOracle& f,
                                         const std::vector<cplx>& grid, const DecomposeSettings& settings = {});

/// max_k max_j |A_k(phi_j(z)) - A_k(z)|.
double fiber_constancy(const GammaFunction& gamma, const AnalyticOracle& f, cplx z,
                       const DecomposeSettings& settings = {});

/// Deterministic polar grid: rings at radius (i + 1/2) R / rings, angles offset per ring.
std::vector<cplx> polar_grid(int rings, int spokes, double radius);

/// Even and odd parts of f with respect to the involution phi of a degree-2 generator.
struct Degree2Split {
  std::vector<cplx> points;
  std::vector<cplx> partner;  // phi(z)
  std::vector<cplx> f;
  std::vector<cplx> pi1;      // (f + f o phi) / 2
  std::vector<cplx> pi2;      // (f - f o phi) / 2
};

/// The other fiber point. Throws DegreeNotTwo.
cplx involution(const Generator& b, cplx z);

Degree2Split degree2_split(const std::function<cplx(cplx)>& f, const Generator& b, const std::vector<cplx>& grid);
Degree2Split degree2_split(const AnalyticOracle& f, const Generator& b, const std::vector<cplx>& grid);

/// Exact involution -k0/k1 from K = k1(z) t + k0(z). Throws DegreeNotTwo.
ExactRational exact_involution(const Generator& b);

inline constexpr int kInfiniteOrder = INT_MAX;

struct MembershipZero {
  cplx zero;
  int required = 0;  // multiplicity as a zero of Gamma(g)
  int attained = 0;  // vanishing order of pi2(f); kInfiniteOrder when pi2(f) = 0
};

struct MembershipCertificate {
  bool member = false;
  ExactRational pi2;
  std::vector<MembershipZero> zeros;
};

/// Decides f in closure(C[B] + I(g) H^2) for deg B = 2 with rational f and g.
/// Throws NotRational, DegreeNotTwo, InvalidInput (f with a pole in the closed disk).
MembershipCertificate degree2_membership(const Generator& b, const AnalyticOracle& g, const AnalyticOracle& f);

}  // namespace fiberalg
