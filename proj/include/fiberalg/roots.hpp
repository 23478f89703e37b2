#pragma once

#include <complex>
#include <vector>

#include "fiberalg/polynomial.hpp"

namespace fiberalg {

struct Root {
  std::complex<double> value;
  int multiplicity = 1;
};

/// Roots with multiplicity; total multiplicity equals the degree.
struct RootSet {
  std::vector<Root> roots;
  double residual = 0.0;  // max |p(root)| over the reported roots

  int total_multiplicity() const;
  /// Every root repeated by its multiplicity.
  std::vector<std::complex<double>> values() const;
};

struct RootOptions {
  double cluster_tolerance = 1e-7;  // relative, for merging numerically repeated roots
  int newton_passes = 1;
};

/// Companion-matrix eigenvalues followed by Newton polishing. Roots at the origin
/// are split off exactly before the eigenvalue step. Values are not clustered.
std::vector<std::complex<double>> poly_root_values(const FloatPoly& p, const RootOptions& opts = {});

/// Throws DegreeZero for constant (or zero) input.
RootSet poly_roots(const FloatPoly& p, const RootOptions& opts = {});
/// Multiplicities come from an exact square-free decomposition.
RootSet poly_roots(const ExactPoly& p, const RootOptions& opts = {});

/// Roots of p strictly inside |z| < radius, counted with multiplicity.
/// Throws BoundaryRoot when a root lies within boundary_tolerance of the circle.
int disk_zero_count(const FloatPoly& p, double radius, double boundary_tolerance = 1e-9);
/// Exact Schur-Cohn count; falls back to the filtered float count when the
/// recursion hits a singular step.
int disk_zero_count(const ExactPoly& p, const mpq_class& radius, double boundary_tolerance = 1e-9);

/// Raw Schur-Cohn count; returns -1 when the recursion is singular.
int schur_cohn_count(const ExactPoly& p, const mpq_class& radius);

}  // namespace fiberalg
