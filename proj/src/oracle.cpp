#include "fiberalg/oracle.hpp"

#include <cmath>
#include <sstream>
#include <variant>

namespace fiberalg {

struct PolyLeaf {
  ExactPoly exact;
  FloatPoly value;
};
struct RationalLeaf {
  ExactPoly num, den;
  FloatPoly fnum, fden;
};
struct BlaschkeLeaf {
  BlaschkeProduct b;
};
struct SingularInnerLeaf {
  cplx point;
  double mass;
};
struct SumNode {
  std::vector<AnalyticOracle> terms;
};
struct ProductNode {
  std::vector<AnalyticOracle> factors;
};
struct ScaleNode {
  GaussianRational exact;
  cplx factor;
  AnalyticOracle child;
};
struct ComposeNode {
  AnalyticOracle outer, inner;
};

struct OracleNode {
  std::variant<PolyLeaf, RationalLeaf, BlaschkeLeaf, SingularInnerLeaf, SumNode, ProductNode, ScaleNode, ComposeNode> data;
  bool boundary_continuous = false;
  int depth = 1;
  int size = 1;
  bool rational = true;
};

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::shared_ptr<OracleNode> make_node(auto data, const std::vector<const AnalyticOracle*>& children) {
  auto node = std::make_shared<OracleNode>();
  node->data = std::move(data);
  for (const auto* c : children) {
    node->depth = std::max(node->depth, c->depth() + 1);
    node->size += c->size();
    node->rational = node->rational && c->is_rational();
  }
  return node;
}

std::pair<cplx, cplx> horner_jet(const FloatPoly& p, cplx z) {
  cplx v(0), d(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  return {v, d};
}

std::string fmt_c(cplx z) {
  std::ostringstream os;
  os.precision(6);
  if (z.imag() == 0) os << z.real();
  else os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
  return os.str();
}

std::string describe_poly(const FloatPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == cplx(0)) continue;
    if (!out.empty()) out += " + ";
    out += fmt_c(p.coeffs()[k]);
    if (k == 1) out += "z";
    else if (k > 1) out += "z^" + std::to_string(k);
  }
  return out;
}

// Real and imaginary parts of (z + p) / (z - p) for |p| = 1, with the real part
// formed as (|z|^2 - 1) / |z - p|^2 to keep it accurate near the circle.
cplx herglotz_kernel(cplx z, cplx p) {
  const cplx d = z - p;
  const double d2 = std::norm(d);
  if (!(d2 > 1e-300)) fail(ErrorKind::EvaluationFailure, "singular inner factor evaluated at its boundary point");
  const double r = std::abs(z);
  const double re = (r - 1.0) * (r + 1.0) / d2;
  const double im = 2.0 * (p * std::conj(z)).imag() / d2;
  return {re, im};
}

}  // namespace

AnalyticOracle AnalyticOracle::poly(ExactPoly p) {
  FloatPoly f = to_float(p);
  return AnalyticOracle(make_node(PolyLeaf{std::move(p), std::move(f)}, {}));
}

AnalyticOracle AnalyticOracle::poly(const FloatPoly& p) { return poly(to_exact(p)); }

AnalyticOracle AnalyticOracle::rational(ExactPoly num, ExactPoly den) {
  if (den.is_zero()) fail(ErrorKind::InvalidInput, "rational function with zero denominator");
  FloatPoly fn = to_float(num), fd = to_float(den);
  return AnalyticOracle(make_node(RationalLeaf{std::move(num), std::move(den), std::move(fn), std::move(fd)}, {}));
}

AnalyticOracle AnalyticOracle::blaschke(BlaschkeProduct b) {
  return AnalyticOracle(make_node(BlaschkeLeaf{std::move(b)}, {}));
}

AnalyticOracle AnalyticOracle::singular_inner(cplx point, double mass) {
  if (std::abs(std::abs(point) - 1.0) > 1e-9) fail(ErrorKind::InvalidInput, "singular inner point must lie on the unit circle");
  if (!(mass > 0.0) || !std::isfinite(mass)) fail(ErrorKind::InvalidInput, "singular inner mass must be positive");
  auto node = make_node(SingularInnerLeaf{point / std::abs(point), mass}, {});
  node->rational = false;
  return AnalyticOracle(node);
}

AnalyticOracle AnalyticOracle::sum(std::vector<AnalyticOracle> terms) {
  if (terms.empty()) fail(ErrorKind::InvalidInput, "sum needs at least one term");
  std::vector<const AnalyticOracle*> kids;
  for (const auto& t : terms) kids.push_back(&t);
  auto node = make_node(SumNode{}, kids);
  std::get<SumNode>(node->data).terms = std::move(terms);
  return AnalyticOracle(node);
}

AnalyticOracle AnalyticOracle::product(std::vector<AnalyticOracle> factors) {
  if (factors.empty()) fail(ErrorKind::InvalidInput, "product needs at least one factor");
  std::vector<const AnalyticOracle*> kids;
  for (const auto& t : factors) kids.push_back(&t);
  auto node = make_node(ProductNode{}, kids);
  std::get<ProductNode>(node->data).factors = std::move(factors);
  return AnalyticOracle(node);
}

AnalyticOracle AnalyticOracle::scale(GaussianRational factor, AnalyticOracle child) {
  const cplx f = factor.to_complex();
  auto node = make_node(ScaleNode{std::move(factor), f, child}, {&child});
  return AnalyticOracle(node);
}

AnalyticOracle AnalyticOracle::scale(cplx factor, AnalyticOracle child) {
  return scale(GaussianRational::from_complex(factor), std::move(child));
}

AnalyticOracle AnalyticOracle::compose(AnalyticOracle outer, AnalyticOracle inner) {
  auto node = make_node(ComposeNode{outer, inner}, {&outer, &inner});
  return AnalyticOracle(node);
}

AnalyticOracle::Kind AnalyticOracle::kind() const { return static_cast<Kind>(node_->data.index()); }
int AnalyticOracle::depth() const { return node_->depth; }
int AnalyticOracle::size() const { return node_->size; }
bool AnalyticOracle::is_rational() const { return node_->rational; }
bool AnalyticOracle::boundary_continuous() const { return node_->boundary_continuous; }

void AnalyticOracle::check_limits(const OracleLimits& limits) const {
  if (depth() > limits.max_depth)
    fail(ErrorKind::InvalidInput, "function tree depth " + std::to_string(depth()) + " exceeds the cap " + std::to_string(limits.max_depth));
  if (size() > limits.max_size)
    fail(ErrorKind::InvalidInput, "function tree size " + std::to_string(size()) + " exceeds the cap " + std::to_string(limits.max_size));
}

AnalyticOracle AnalyticOracle::with_boundary_continuous(bool flag) const {
  auto node = std::make_shared<OracleNode>(*node_);
  node->boundary_continuous = flag;
  return AnalyticOracle(node);
}

ExactRational AnalyticOracle::to_exact_rational() const {
  if (!is_rational()) fail(ErrorKind::NotRational, "function contains a singular inner factor: " + describe());
  return std::visit(
      overloaded{
          [](const PolyLeaf& n) { return ExactRational(n.exact); },
          [](const RationalLeaf& n) { return ExactRational(n.num, n.den); },
          [](const BlaschkeLeaf& n) { return ExactRational(n.b.exact_numerator(), n.b.exact_denominator()); },
          [](const SingularInnerLeaf&) -> ExactRational { fail(ErrorKind::NotRational, "singular inner factor"); },
          [](const SumNode& n) {
            ExactRational acc;
            for (const auto& t : n.terms) acc = acc + t.to_exact_rational();
            return acc;
          },
          [](const ProductNode& n) {
            ExactRational acc(ExactPoly::constant(1));
            for (const auto& t : n.factors) acc = acc * t.to_exact_rational();
            return acc;
          },
          [](const ScaleNode& n) { return ExactRational(ExactPoly::constant(n.exact)) * n.child.to_exact_rational(); },
          [](const ComposeNode& n) { return fiberalg::compose(n.outer.to_exact_rational(), n.inner.to_exact_rational()); },
      },
      node_->data);
}

ScaledComplex AnalyticOracle::eval_scaled(cplx z) const {
  return std::visit(
      overloaded{
          [&](const PolyLeaf& n) { return ScaledComplex(poly_eval(n.value, z)); },
          [&](const RationalLeaf& n) {
            const cplx d = poly_eval(n.fden, z);
            if (!(std::abs(d) > 1e-300)) fail(ErrorKind::EvaluationFailure, "rational leaf evaluated at a pole");
            return ScaledComplex(poly_eval(n.fnum, z) / d);
          },
          [&](const BlaschkeLeaf& n) { return ScaledComplex(n.b.eval(z)); },
          [&](const SingularInnerLeaf& n) { return ScaledComplex::exp(n.mass * herglotz_kernel(z, n.point)); },
          [&](const SumNode& n) {
            ScaledComplex acc;
            for (const auto& t : n.terms) acc += t.eval_scaled(z);
            return acc;
          },
          [&](const ProductNode& n) {
            ScaledComplex acc(1.0);
            for (const auto& t : n.factors) acc *= t.eval_scaled(z);
            return acc;
          },
          [&](const ScaleNode& n) { return ScaledComplex(n.factor) * n.child.eval_scaled(z); },
          [&](const ComposeNode& n) { return n.outer.eval_scaled(n.inner.eval_scaled(z).value()); },
      },
      node_->data);
}

cplx AnalyticOracle::eval(cplx z) const {
  const ScaledComplex v = eval_scaled(z);
  if (!v.is_finite()) fail(ErrorKind::EvaluationFailure, "non-finite value at " + fmt_c(z));
  return v.value();
}

Jet AnalyticOracle::jet(cplx z) const {
  return std::visit(
      overloaded{
          [&](const PolyLeaf& n) {
            auto [v, d] = horner_jet(n.value, z);
            return Jet{v, d};
          },
          [&](const RationalLeaf& n) {
            auto [nv, nd] = horner_jet(n.fnum, z);
            auto [dv, dd] = horner_jet(n.fden, z);
            if (!(std::abs(dv) > 1e-300)) fail(ErrorKind::EvaluationFailure, "rational leaf evaluated at a pole");
            return Jet{nv / dv, (nd * dv - nv * dd) / (dv * dv)};
          },
          [&](const BlaschkeLeaf& n) { return Jet{n.b.eval(z), n.b.derivative_at(z)}; },
          [&](const SingularInnerLeaf& n) {
            const cplx v = ScaledComplex::exp(n.mass * herglotz_kernel(z, n.point)).value();
            const cplx d = z - n.point;
            return Jet{v, v * n.mass * (-2.0 * n.point) / (d * d)};
          },
          [&](const SumNode& n) {
            Jet acc{0.0, 0.0};
            for (const auto& t : n.terms) {
              const Jet j = t.jet(z);
              acc.value += j.value;
              acc.derivative += j.derivative;
            }
            return acc;
          },
          [&](const ProductNode& n) {
            Jet acc{1.0, 0.0};
            for (const auto& t : n.factors) {
              const Jet j = t.jet(z);
              acc = Jet{acc.value * j.value, acc.derivative * j.value + acc.value * j.derivative};
            }
            return acc;
          },
          [&](const ScaleNode& n) {
            const Jet j = n.child.jet(z);
            return Jet{n.factor * j.value, n.factor * j.derivative};
          },
          [&](const ComposeNode& n) {
            const Jet in = n.inner.jet(z);
            const Jet out = n.outer.jet(in.value);
            return Jet{out.value, out.derivative * in.derivative};
          },
      },
      node_->data);
}

cplx AnalyticOracle::derivative(cplx z) const {
  if (is_rational()) return jet(z).derivative;
  constexpr double h = 1e-6;
  return (eval(z + h) - eval(z - h)) / (2.0 * h);
}

std::string AnalyticOracle::describe() const {
  return std::visit(
      overloaded{
          [](const PolyLeaf& n) { return "poly[" + describe_poly(n.value) + "]"; },
          [](const RationalLeaf& n) { return "rational[(" + describe_poly(n.fnum) + ")/(" + describe_poly(n.fden) + ")]"; },
          [](const BlaschkeLeaf& n) {
            std::string s = "blaschke[";
            for (std::size_t k = 0; k < n.b.zeros().size(); ++k) s += (k ? "," : "") + fmt_c(n.b.zeros()[k]);
            return s + "]";
          },
          [](const SingularInnerLeaf& n) { return "sing_inner[" + fmt_c(n.point) + "," + fmt_c(n.mass) + "]"; },
          [](const SumNode& n) {
            std::string s = "sum(";
            for (std::size_t k = 0; k < n.terms.size(); ++k) s += (k ? ", " : "") + n.terms[k].describe();
            return s + ")";
          },
          [](const ProductNode& n) {
            std::string s = "product(";
            for (std::size_t k = 0; k < n.factors.size(); ++k) s += (k ? ", " : "") + n.factors[k].describe();
            return s + ")";
          },
          [](const ScaleNode& n) { return "scale(" + fmt_c(n.factor) + ", " + n.child.describe() + ")"; },
          [](const ComposeNode& n) { return "compose(" + n.outer.describe() + ", " + n.inner.describe() + ")"; },
      },
      node_->data);
}

namespace {
template <typename T>
const T& leaf(const OracleNode& n, const char* what) {
  const T* p = std::get_if<T>(&n.data);
  if (!p) fail(ErrorKind::InvalidInput, std::string("oracle node is not ") + what);
  return *p;
}
}  // namespace

std::vector<AnalyticOracle> AnalyticOracle::children() const {
  return std::visit(overloaded{
                        [](const SumNode& n) { return n.terms; },
                        [](const ProductNode& n) { return n.factors; },
                        [](const ScaleNode& n) { return std::vector<AnalyticOracle>{n.child}; },
                        [](const ComposeNode& n) { return std::vector<AnalyticOracle>{n.outer, n.inner}; },
                        [](const auto&) { return std::vector<AnalyticOracle>{}; },
                    },
                    node_->data);
}

const ExactPoly& AnalyticOracle::poly_coeffs() const { return leaf<PolyLeaf>(*node_, "a polynomial").exact; }
const ExactPoly& AnalyticOracle::rational_num() const { return leaf<RationalLeaf>(*node_, "rational").num; }
const ExactPoly& AnalyticOracle::rational_den() const { return leaf<RationalLeaf>(*node_, "rational").den; }
const BlaschkeProduct& AnalyticOracle::blaschke_leaf() const { return leaf<BlaschkeLeaf>(*node_, "a Blaschke product").b; }
cplx AnalyticOracle::singular_point() const { return leaf<SingularInnerLeaf>(*node_, "singular inner").point; }
double AnalyticOracle::singular_mass() const { return leaf<SingularInnerLeaf>(*node_, "singular inner").mass; }
const GaussianRational& AnalyticOracle::scale_factor() const { return leaf<ScaleNode>(*node_, "a scale").exact; }

Generator::Generator(BlaschkeProduct b)
    : blaschke_(std::make_shared<const BlaschkeProduct>(std::move(b))), degree_(blaschke_->degree()) {}

Generator::Generator(ExactPoly p) {
  if (p.degree() < 1) fail(ErrorKind::InvalidInput, "polynomial generator must be nonconstant");
  fpoly_ = to_float(p);
  poly_ = std::make_shared<const ExactPoly>(std::move(p));
  degree_ = poly_->degree();
}

const BlaschkeProduct& Generator::blaschke() const {
  if (!blaschke_) fail(ErrorKind::InvalidInput, "generator is a polynomial, not a Blaschke product");
  return *blaschke_;
}

const ExactPoly& Generator::exact_poly() const {
  if (!poly_) fail(ErrorKind::InvalidInput, "generator is a Blaschke product, not a polynomial");
  return *poly_;
}

cplx Generator::eval(cplx z) const { return blaschke_ ? blaschke_->eval(z) : poly_eval(fpoly_, z); }

cplx Generator::derivative_at(cplx z) const {
  return blaschke_ ? blaschke_->derivative_at(z) : horner_jet(fpoly_, z).second;
}

FloatPoly Generator::fiber_polynomial(cplx w) const {
  return blaschke_ ? blaschke_->fiber_polynomial(w) : fpoly_ - FloatPoly::constant(w);
}

Fiber Generator::fiber(cplx z, const FiberOptions& opts) const {
  if (blaschke_) return fiberalg::fiber(*blaschke_, z, opts);
  const cplx w = eval(z);
  const FloatPoly poly = fpoly_ - FloatPoly::constant(w);
  Fiber f = assemble_fiber(z, poly_root_values(poly), opts.cluster_tolerance);
  for (const auto& p : f.points) f.residual = std::max(f.residual, std::abs(eval(p) - w));
  return f;
}

cplx Generator::discriminant_d(cplx z) const {
  if (blaschke_) return fiberalg::discriminant_d(*blaschke_, z);
  return horner_jet(fpoly_, z).second / fpoly_.leading();
}

std::vector<Root> Generator::critical_points() const {
  if (blaschke_) return critical_data(*blaschke_).critical_points.roots;
  const FloatPoly d = fiberalg::derivative(fpoly_);
  if (d.degree() < 1) return {};
  return poly_roots(d).roots;
}

std::vector<cplx> Generator::s0_points() const {
  std::vector<cplx> out;
  for (const auto& r : critical_points()) {
    for (const auto& p : fiber(r.value).points) {
      const bool seen = std::any_of(out.begin(), out.end(), [&](cplx q) { return std::abs(p - q) < 1e-12; });
      if (!seen) out.push_back(p);
    }
  }
  return out;
}

AnalyticOracle Generator::as_oracle() const {
  return blaschke_ ? AnalyticOracle::blaschke(*blaschke_) : AnalyticOracle::poly(*poly_);
}

bool Generator::in_domain(cplx z, double slack) const { return !blaschke_ || std::abs(z) <= 1.0 + slack; }

std::string Generator::describe() const { return as_oracle().describe(); }

}  // namespace fiberalg
