#include "galinv/calculus/power.hpp"

#include <stdexcept>

#include "galinv/exact/pauli.hpp"

namespace galinv {

DiffOp op_compose(const DiffOp& lhs, const DiffOp& rhs) {
  if (lhs.ncomp() != rhs.ncomp()) throw DimensionError("cannot compose operators on different spinor sizes");
  DiffOp out(lhs.ncomp());
  for (const auto& [a, A] : lhs.terms()) {
    for (const auto& [b, B] : rhs.terms()) out.add(a + b, A * B);
  }
  return out;
}

DiffOp op_power(const DiffOp& L, int N) {
  if (N < 0) throw std::invalid_argument("negative operator power");
  DiffOp out(L.ncomp());
  out.set(MultiIndex{}, identity_cr(L.ncomp()));
  for (int k = 0; k < N; ++k) out = op_compose(out, L);
  return out;
}

PowerInvarianceReport invariance_of_power(const DiffOp& L, int N, const TransformContext& ctx) {
  PowerInvarianceReport rep;
  rep.N = N;
  const DiffOp p = op_power(L, N);
  rep.order = p.order();
  rep.mixed_terms = mixed_term_report(p);
  const DiffOpVP diff = transform_operator(p, ctx) - to_vpoly(p);
  auto survives = [&](const MatrixVP& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!constrained_part(m(i, j), ctx).is_zero()) return true;
      }
    }
    return false;
  };
  for (const auto& [mi, m] : diff.terms()) rep.residual_terms += survives(m) ? 1 : 0;
  rep.invariant = rep.residual_terms == 0;
  return rep;
}

std::vector<PowerInvarianceReport> power_sweep(const DiffOp& L, int max_n, const TransformContext& ctx) {
  std::vector<PowerInvarianceReport> out(static_cast<std::size_t>(std::max(max_n, 0)));
#pragma omp parallel for schedule(dynamic)
  for (int n = 1; n <= max_n; ++n) out[static_cast<std::size_t>(n - 1)] = invariance_of_power(L, n, ctx);
  return out;
}

bool is_scalar_operator(const DiffOp& op) {
  for (const auto& [mi, m] : op.terms()) {
    if (m != scale(m(0, 0), identity_cr(op.ncomp()))) return false;
  }
  return true;
}

bool block_diagonal_equal(const DiffOp& op) {
  if (op.ncomp() % 2 != 0) return false;
  const std::size_t h = op.ncomp() / 2;
  for (const auto& [mi, m] : op.terms()) {
    if (!m.block(0, h, h, h).is_zero() || !m.block(h, 0, h, h).is_zero()) return false;
    if (m.block(0, 0, h, h) != m.block(h, h, h, h)) return false;
  }
  return true;
}

DiffOp schrodinger_operator(std::size_t ncomp, const Rational& mass) {
  DiffOp op(ncomp);
  for (int j = 1; j <= 3; ++j) op.set(MultiIndex::dx(j, 2), identity_cr(ncomp));
  op.set(MultiIndex::dt(), scale(ComplexRational(Rational(0), 2 * mass), identity_cr(ncomp)));
  return op;
}

DiffOp levy_leblond_operator(const Rational& mass) {
  const MatrixCR z(2, 2);
  const MatrixCR id = identity_cr(2);
  DiffOp op(4);
  op.set(MultiIndex::dt(), from_blocks(z, z, id, z));
  for (int j = 1; j <= 3; ++j) op.set(MultiIndex::dx(j), from_blocks(pauli(j), z, z, -pauli(j)));
  op.set(MultiIndex{}, from_blocks(z, scale(ComplexRational(Rational(0), 2 * mass), id), z, z));
  return op;
}

}  // namespace galinv
