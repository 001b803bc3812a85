#include "galinv/engine/transform.hpp"

#include <stdexcept>

#include "galinv/exact/pauli.hpp"

namespace galinv {

namespace {

const ComplexRational kI = ComplexRational::i();

Mat3T<VPoly> to_vpoly(const Mat3& r) {
  Mat3T<VPoly> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = VPoly(ComplexRational(r[i][j]));
  }
  return out;
}

std::array<VPoly, 3> to_vpoly(const Vec3& v) {
  return {VPoly(ComplexRational(v[0])), VPoly(ComplexRational(v[1])), VPoly(ComplexRational(v[2]))};
}

DerivPoly multiply(const DerivPoly& x, const DerivPoly& y) {
  DerivPoly out;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      VPoly& slot = out[mx + my];
      slot += cx * cy;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

void check_generators(const GeneratorSet& gens) {
  if (gens.boost[0].rows() != gens.ncomp()) throw DimensionError("boost and rotation generators differ in size");
}

}  // namespace

void set_phase_constants(TransformContext& ctx, const Mat3T<VPoly>& R, const std::array<VPoly, 3>& v) {
  const VPoly m(ComplexRational(ctx.mass));
  ctx.k1 = VPoly(ComplexRational(Rational(0), Rational(-1, 2))) * m * vec3_dot(v, v);
  ctx.k2 = v;
  const std::array<VPoly, 3> rtv = mat3_apply(mat3_transpose(R), v);
  for (std::size_t i = 0; i < 3; ++i) ctx.k3[i] = VPoly(-kI) * m * rtv[i];
  ctx.k4 = R;
}

TransformContext identity_context(std::size_t ncomp, const Rational& mass) {
  TransformContext ctx;
  ctx.label = "identity";
  ctx.mass = mass;
  ctx.G = MatrixVP::identity(ncomp);
  ctx.Ginv = MatrixVP::identity(ncomp);
  return ctx;
}

TransformContext rotation_generator_context(const GeneratorSet& gens, int axis, const Rational& mass) {
  if (axis < 1 || axis > 3) throw std::out_of_range("rotation axis must be 1..3");
  const std::size_t n = gens.ncomp();
  TransformContext ctx = identity_context(n, mass);
  ctx.label = "rotation-generator-" + std::to_string(axis);
  ctx.kind = ContextKind::RotationGenerator;
  ctx.linearized = true;
  const VPoly eps = VPoly::var(0);
  const MatrixVP Y = convert<VPoly>(scale(-kI, gens.rotation[static_cast<std::size_t>(axis - 1)]));
  ctx.G = MatrixVP::identity(n) + scale(eps, Y);
  ctx.Ginv = MatrixVP::identity(n) - scale(eps, Y);

  // Matching spatial rotation: adjoint action of the spin-1/2 generator on the Pauli basis.
  const MatrixCR y2 = scale(ComplexRational(Rational(0), Rational(-1, 2)), pauli(axis));
  for (int l = 1; l <= 3; ++l) {
    for (int i = 1; i <= 3; ++i) {
      const ComplexRational a = trace(pauli(l) * commutator(y2, pauli(i))) * ComplexRational(Rational(1, 2));
      VPoly& entry = ctx.k4[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(i - 1)];
      entry += eps * a;
    }
  }
  return ctx;
}

TransformContext finite_rotation_context(const GeneratorSet& gens, const Quaternion& q, const Rational& mass) {
  const SpinorRep rep = spinor_rotation(gens.rotation, q);
  TransformContext ctx = identity_context(gens.ncomp(), mass);
  ctx.label = "finite-rotation(" + to_string(q.w) + "," + to_string(q.x) + "," + to_string(q.y) + "," +
              to_string(q.z) + ")";
  ctx.kind = ContextKind::FiniteRotation;
  ctx.G = convert<VPoly>(rep.V);
  ctx.Ginv = convert<VPoly>(scale(ComplexRational(Rational(1) / rep.norm2), dagger(rep.V)));
  ctx.k4 = to_vpoly(rotation_from_quaternion(q));
  return ctx;
}

TransformContext boost_context(const GeneratorSet& gens, const std::array<VPoly, 3>& v, const Rational& mass) {
  check_generators(gens);
  TransformContext ctx = identity_context(gens.ncomp(), mass);
  ctx.label = "boost(" + v[0].to_string() + "," + v[1].to_string() + "," + v[2].to_string() + ")";
  ctx.kind = ContextKind::Boost;
  const GeneratorTriple xv = gens.effective_boost();
  ctx.G = boost_matrix(xv, v);
  ctx.Ginv = boost_matrix(xv, {-v[0], -v[1], -v[2]});
  set_phase_constants(ctx, mat3_identity<VPoly>(), v);
  return ctx;
}

TransformContext axis_boost_context(const GeneratorSet& gens, int axis, const Rational& mass) {
  if (axis < 1 || axis > 3) throw std::out_of_range("boost axis must be 1..3");
  std::array<VPoly, 3> v{};
  v[static_cast<std::size_t>(axis - 1)] = VPoly::var(axis - 1);
  TransformContext ctx = boost_context(gens, v, mass);
  ctx.label = "boost-axis-" + std::to_string(axis);
  return ctx;
}

TransformContext symbolic_boost_context(const GeneratorSet& gens, const Rational& mass) {
  TransformContext ctx = boost_context(gens, {VPoly::var(0), VPoly::var(1), VPoly::var(2)}, mass);
  ctx.label = "boost-symbolic";
  return ctx;
}

TransformContext element_context(const GeneratorSet& gens, const GalileiElement& g, const Rational& mass) {
  check_generators(gens);
  if (!is_valid(g)) throw std::invalid_argument("element rotation is not a proper rotation");
  const Quaternion q = quaternion_from_rotation(g.R);
  const SpinorRep rep = spinor_rotation(gens.rotation, q);
  const std::array<VPoly, 3> v = to_vpoly(g.v);
  const GeneratorTriple xv = gens.effective_boost();
  TransformContext ctx = identity_context(gens.ncomp(), mass);
  ctx.label = "element";
  ctx.kind = ContextKind::Element;
  ctx.G = boost_matrix(xv, v) * convert<VPoly>(rep.V);
  ctx.Ginv = convert<VPoly>(scale(ComplexRational(Rational(1) / rep.norm2), dagger(rep.V))) *
             boost_matrix(xv, {-v[0], -v[1], -v[2]});
  set_phase_constants(ctx, to_vpoly(g.R), v);
  return ctx;
}

DerivPoly substitute_derivatives(const MultiIndex& mi, const TransformContext& ctx) {
  DerivPoly time{{MultiIndex{}, ctx.k1}, {MultiIndex::dt(), VPoly(1)}};
  for (int j = 1; j <= 3; ++j) time[MultiIndex::dx(j)] = ctx.k2[static_cast<std::size_t>(j - 1)];
  std::erase_if(time, [](const auto& kv) { return kv.second.is_zero(); });

  DerivPoly out{{MultiIndex{}, VPoly(1)}};
  for (int k = 0; k < mi.a; ++k) out = multiply(out, time);
  for (std::size_t i = 0; i < 3; ++i) {
    if (mi.b[i] == 0) continue;
    DerivPoly space{{MultiIndex{}, ctx.k3[i]}};
    for (int j = 1; j <= 3; ++j) space[MultiIndex::dx(j)] = ctx.k4[static_cast<std::size_t>(j - 1)][i];
    std::erase_if(space, [](const auto& kv) { return kv.second.is_zero(); });
    for (int k = 0; k < mi.b[i]; ++k) out = multiply(out, space);
  }
  return out;
}

DiffOpVP transform_operator(const DiffOp& op, const TransformContext& ctx) {
  return transform_operator(to_vpoly(op), ctx);
}

VPoly constrained_part(const VPoly& p, const TransformContext& ctx) {
  if (!ctx.linearized) return p;
  const Monomial first{1, 0, 0};
  return VPoly::monomial(first, p.coefficient(first));
}

bool verify_invariance(const DiffOp& op, const TransformContext& ctx) {
  const DiffOpVP diff = transform_operator(op, ctx) - to_vpoly(op);
  for (const auto& [mi, m] : diff.terms()) {
    for (const auto& p : m.data()) {
      if (!constrained_part(p, ctx).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace galinv
