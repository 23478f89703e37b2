#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fiberalg/gamma.hpp"

namespace fiberalg {

struct ClassifySettings {
  GammaSettings gamma;
  WitnessSettings witness;
  double identically_zero_tolerance = 1e-10;
  int identically_zero_points = 64;
  double defect_threshold = 0.05;
  std::vector<double> radii{0.9, 0.99, 0.999};
  int defect_points = 128;
  int max_zeros = 64;
  int contour_points = 256;
  double zero_search_radius = 0.999;
  bool prefer_exact = true;
  double circle_tolerance = 1e-9;      // exact roots this close to |z| = 1 are boundary zeros
  double structure_tolerance = 1e-8;
  int boundary_grid = 2048;            // disk-algebra boundary scan
  double boundary_zero_tolerance = 1e-8;
  double boundary_certify = 1e-5;      // minima in between are unresolved
  int threads = 1;
};

/// Signed zero count inside |z| < radius from the accumulated phase of Gamma.
/// Sampling refines until consecutive phase steps stay below pi/2.
/// Throws NearCircleZero when refinement stalls.
int count_zeros_argument(const GammaFunction& gamma, double radius, int points = 256);

/// Zeros in |z| < radius with multiplicity, by recursive subdivision with
/// winding numbers and Newton polishing; exact roots when the rational form is
/// present. Throws BudgetExceeded beyond max_zeros.
std::vector<Root> find_zeros(const GammaFunction& gamma, double radius, int max_zeros = 64, int contour_points = 256);

struct DefectRow {
  double radius = 0.0;
  double raw_defect = 0.0;   // resolved circle mean of log|Gamma| minus the center value
  int raw_points = 0;
  bool raw_converged = false;
  double sampled = 0.0;      // fixed-grid mean of log|Gamma / B_zeros| minus the center value
  double sampled_refined = 0.0;  // same with twice the grid points
  double zero_mass = 0.0;    // sum over found zeros inside the radius of log(r/|a|)
};

struct OuterDefect {
  std::vector<DefectRow> rows;
  int points = 0;
  int origin_multiplicity = 0;
  double log_center = 0.0;               // log|Gamma/z^k| at 0
  double raw_defect = 0.0;               // at the outermost radius
  double defect_after_zero_removal = 0.0;
  double defect_refined = 0.0;
  double extrapolated = 0.0;             // linear in (1 - r) over the two outermost radii
  std::vector<Root> zeros;
};

/// Radii must lie in (0, 1). Throws ZeroAtOrigin when Gamma vanishes at 0 and
/// no origin zero is listed.
OuterDefect outer_defect(const GammaFunction& gamma, const std::vector<double>& radii, int points,
                         const std::vector<Root>& zeros, int threads = 1);
OuterDefect outer_defect(const GammaFunction& gamma, const std::vector<double>& radii, int points);

enum class VerdictKind { Dense, FiniteCodim, InfiniteCodim, GammaZero, Inconclusive };
enum class Reason { ZeroFree, FiniteZeros, InfiniteZerosSuspected, SingularFactorSuspected, IdenticallyZero, DefectUnstable };

std::string to_string(VerdictKind kind);
std::string to_string(Reason reason);

/// Fiber blocks of size m on which g is constant, observed at sample points.
struct VanishingStructure {
  int block_size = 0;
  int degree = 0;
  struct Sample {
    cplx z;
    std::vector<cplx> points;
    std::vector<std::vector<int>> blocks;
  };
  std::vector<Sample> samples;
};

struct Diagnostics {
  std::string path;  // "exact" or "oracle"
  std::vector<Root> zeros;            // zeros in the open disk
  std::vector<cplx> boundary_zeros;   // disk-algebra mode only
  std::optional<OuterDefect> defect;
  double identically_zero_max = 0.0;  // max |Gamma| over the vanishing probe
  std::vector<std::string> notes;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<int> codim_bound;
  std::optional<int> exact_codim;
  Reason reason = Reason::ZeroFree;
  Diagnostics diagnostics;
  std::optional<VanishingStructure> structure;
};

/// Closure of the algebra generated by the generator and g in H^p.
/// Throws InvalidInput for degree-one generators and unbounded rational g.
Verdict classify(const Generator& generator, const AnalyticOracle& g, const ClassifySettings& settings = {});

/// Closure in the disk algebra; g must be declared boundary-continuous or be rational.
Verdict disk_algebra_classify(const Generator& generator, const AnalyticOracle& g, const ClassifySettings& settings = {});

/// Throws StructureNotFound when the fibers do not split into equal blocks.
VanishingStructure vanishing_structure(const Generator& generator, const AnalyticOracle& g,
                                       const std::vector<cplx>& samples, double tolerance = 1e-8);
/// Quasi-random sample points away from S0.
std::vector<cplx> structure_samples(const Generator& generator, int count = 8);

/// Point-difference or derivative functional vanishing on the closed algebra.
struct Annihilator {
  enum class Kind { PointDifference, DerivativeAt };
  Kind kind;
  cplx point;
  cplx partner;        // PointDifference only
  double self_test_max = 0.0;  // max over g^alpha B^beta, alpha, beta <= 4

  cplx apply(const AnalyticOracle& f) const;
};

Annihilator annihilator_at_zero(const GammaFunction& gamma, cplx a, const WitnessSettings& settings = {});

struct MonomialCodim {
  int order = 0;       // (n-1)(m-1), the order of the zero of Gamma at 0
  int codim = 0;       // order / 2
  int gaps = 0;        // counted directly from the semigroup generated by n and m
  int conductor = 0;   // least c with every integer >= c representable
};

/// Throws NotCoprime when gcd(n, m) > 1, InvalidInput when n or m is below 2.
MonomialCodim monomial_codim(int n, int m);

/// For a polynomial family, min over k != j of the disk zero count of Gamma_{p_j}(p_k),
/// ignoring identically vanishing entries.
struct FamilyBound {
  std::vector<std::optional<int>> per_generator;
  std::optional<int> bound;  // minimum over j
};
FamilyBound generator_count_bound(const std::vector<ExactPoly>& family);

/// True when the nonvanishing Gamma_{p_j}(p_k), k != j, share no zero in the disk.
bool no_common_disk_zero(const std::vector<ExactPoly>& family, std::size_t j);

}  // namespace fiberalg
