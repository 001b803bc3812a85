#pragma once

#include <vector>

#include "galinv/engine/diffop.hpp"
#include "galinv/engine/transform.hpp"

namespace galinv {

/// Product of constant-coefficient operators: coefficients multiply, exponents add.
DiffOp op_compose(const DiffOp& lhs, const DiffOp& rhs);

/// L^N; L^0 is the identity operator.
DiffOp op_power(const DiffOp& L, int N);

struct PowerInvarianceReport {
  int N = 0;
  bool invariant = false;
  /// Terms of transform(L^N) - L^N that survive (constrained part only).
  std::size_t residual_terms = 0;
  std::vector<MultiIndex> mixed_terms;
  int order = 0;
};

PowerInvarianceReport invariance_of_power(const DiffOp& L, int N, const TransformContext& ctx);

/// Reports for N = 1..max_n, computed concurrently.
std::vector<PowerInvarianceReport> power_sweep(const DiffOp& L, int max_n, const TransformContext& ctx);

/// Every coefficient is a multiple of the identity.
bool is_scalar_operator(const DiffOp& op);

/// Off-diagonal 2x2 blocks of a 4-component operator are all zero and the two
/// diagonal blocks agree.
bool block_diagonal_equal(const DiffOp& op);

/// 2 i m I d_t + I laplacian on ncomp components.
DiffOp schrodinger_operator(std::size_t ncomp, const Rational& mass);

/// B1 lower-left I, B2j = diag(sigma_j, -sigma_j), B3 upper-right 2 i m I.
DiffOp levy_leblond_operator(const Rational& mass);

}  // namespace galinv
