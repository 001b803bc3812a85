#pragma once

#include "galinv/coupling/ncexpr.hpp"
#include "galinv/engine/diffop.hpp"

namespace galinv {

/// One 2-spinor equation: phi_part * phi + chi_part * chi = 0.
struct CoupledEquation {
  NCExpr phi{2};
  NCExpr chi{2};
};

struct CoupledPair {
  CoupledEquation upper;
  CoupledEquation lower;
};

/// i d_t -> i d_t - V and -i d_j -> -i d_j - A_j, i.e. d_t -> d_t + i V and
/// d_j -> d_j - i A_j, applied to every term; result in normal form.
NCExpr minimal_substitute_matrix(const DiffOp& op);

/// Four-component first-order operator split into the coupled pair on
/// (phi, chi); each block row is multiplied by i. Throws std::invalid_argument
/// for other sizes or orders.
CoupledPair minimal_substitute(const DiffOp& op);

/// Solves the upper equation for chi (its chi part must be -2m I) and
/// substitutes into the lower one. Returns E with E phi = 0, in normal form.
/// Throws std::domain_error for m = 0.
NCExpr eliminate_lower(const CoupledPair& pair, const Rational& m);

/// pi_j = i d_j + A_j.
std::array<NCExpr, 3> kinetic_momentum();

/// (i d_t - V) - (1/2m) [pi.pi + i sigma.(pi x pi)], normal form.
NCExpr pauli_schrodinger_reference(const Rational& m);

/// Field-free expression of a size x size block of op.
NCExpr operator_block(const DiffOp& op, std::size_t row, std::size_t col, std::size_t size);

struct CouplingDerivation {
  Rational mass;
  CoupledPair pair;
  /// chi = chi_of_phi * phi.
  NCExpr chi_of_phi{2};
  NCExpr result{2};
  NCExpr reference{2};
  /// i sigma.(pi x pi) in normal form.
  NCExpr spin_term{2};
  bool matches_reference = false;
  /// V = A = 0 leaves i d_t + (1/2m) laplacian.
  bool free_limit = false;
  /// Spin term vanishes when A has no derivatives.
  bool constant_potential_spin_free = false;
  /// Field-free result is the upper block of L^2, up to a factor.
  bool matches_square = false;
};

CouplingDerivation derive_pauli_schrodinger(const Rational& m);

}  // namespace galinv
