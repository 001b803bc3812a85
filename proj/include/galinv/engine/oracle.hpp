#pragma once

#include <vector>

#include "galinv/engine/constraints.hpp"

namespace galinv {

/// Invariant subspace of an ansatz found by sampling, without the symbolic
/// transformation rule. A plane wave u exp(i (k.x - w t)) seen from the frame
/// x' = R x + v t + a, t' = t + b, psi' = exp(i (m v.x' - m v^2 t' / 2)) rho psi,
/// has frame momentum K = R^T (k - m v) and energy W = w - k.v + m v^2 / 2, so
/// an operator with symbol D is invariant iff
///   rho D(-i W, i K) rho^-1 = D(-i w, i k)
/// for all (w, k). Each sampled element and point contributes ncomp^2 rows.
/// Elements cycle through pure rotation, pure boost and general.
struct OracleOptions {
  int elements = 20;
  /// Sample points (w, k) per element; must exceed the number of monomials
  /// of degree <= order in four variables.
  int points = 0;
  unsigned seed = 1;
};

struct OracleResult {
  /// RREF basis of the sampled invariant subspace.
  std::vector<Vector> basis;
  std::size_t rows = 0;
  int elements = 0;
};

OracleResult sampled_invariant_space(const Ansatz& ansatz, const GeneratorSet& gens, const Rational& mass,
                                     const OracleOptions& options);

}  // namespace galinv
