#pragma once

#include <array>
#include <map>
#include <string>

#include "galinv/engine/diffop.hpp"
#include "galinv/galilei/group.hpp"
#include "galinv/galilei/representation.hpp"

namespace galinv {

/// Substitution polynomial in commuting derivatives.
using DerivPoly = std::map<MultiIndex, VPoly>;

enum class ContextKind { Identity, RotationGenerator, FiniteRotation, Boost, Element };

/// One group element acting on constant-coefficient operators:
///   op -> G * op(d_t -> k1 + d_t + k2.d, d_i -> k3_i + sum_j k4[j][i] d_j) * Ginv.
/// Invariance means the image equals op. For linearized contexts v1 is the
/// infinitesimal parameter and only its first-order part is meaningful.
struct TransformContext {
  std::string label;
  ContextKind kind = ContextKind::Identity;
  bool linearized = false;
  Rational mass{1};
  MatrixVP G;
  MatrixVP Ginv;
  VPoly k1;
  std::array<VPoly, 3> k2;
  std::array<VPoly, 3> k3;
  Mat3T<VPoly> k4 = mat3_identity<VPoly>();

  std::size_t ncomp() const { return G.rows(); }
};

/// Schrodinger phase constants for rotation R then boost v with mass m:
/// k1 = -(i/2) m |v|^2, k2 = v, k3 = -i m R^T v, k4 = R.
void set_phase_constants(TransformContext& ctx, const Mat3T<VPoly>& R, const std::array<VPoly, 3>& v);

TransformContext identity_context(std::size_t ncomp, const Rational& mass);

/// Rotation about axis (1..3) to first order in v1: G = I - i v1 X_axis.
TransformContext rotation_generator_context(const GeneratorSet& gens, int axis, const Rational& mass);

/// Finite rotation from a rational quaternion.
TransformContext finite_rotation_context(const GeneratorSet& gens, const Quaternion& q, const Rational& mass);

/// Pure boost; v may be symbolic or constant polynomials.
TransformContext boost_context(const GeneratorSet& gens, const std::array<VPoly, 3>& v, const Rational& mass);

/// Boost along one axis with symbolic velocity v_axis.
TransformContext axis_boost_context(const GeneratorSet& gens, int axis, const Rational& mass);

/// Fully symbolic boost v = (v1, v2, v3).
TransformContext symbolic_boost_context(const GeneratorSet& gens, const Rational& mass);

/// Concrete element: boost after rotation. Translations act trivially on
/// constant-coefficient operators and are ignored.
TransformContext element_context(const GeneratorSet& gens, const GalileiElement& g, const Rational& mass);

/// Image of d^mi under the context's derivative substitution.
DerivPoly substitute_derivatives(const MultiIndex& mi, const TransformContext& ctx);

/// Image of op; T is VPoly or LinForm.
template <class T>
DiffOpT<T> transform_operator(const DiffOpT<T>& op, const TransformContext& ctx) {
  if (op.ncomp() != ctx.ncomp()) throw DimensionError("operator and representation sizes differ");
  DiffOpT<T> out(op.ncomp());
  std::map<MultiIndex, DerivPoly> cache;
  for (const auto& [mi, B] : op.terms()) {
    const Matrix<T> conj = ctx.G * B * ctx.Ginv;
    auto it = cache.find(mi);
    if (it == cache.end()) it = cache.emplace(mi, substitute_derivatives(mi, ctx)).first;
    for (const auto& [image, c] : it->second) out.add(image, scale(c, conj));
  }
  return out;
}

DiffOpVP transform_operator(const DiffOp& op, const TransformContext& ctx);

/// Keeps only the part of a polynomial that the context constrains
/// (everything, or the v1-linear part when linearized).
VPoly constrained_part(const VPoly& p, const TransformContext& ctx);

/// transform(op) == op, restricted to the constrained part.
bool verify_invariance(const DiffOp& op, const TransformContext& ctx);

}  // namespace galinv
