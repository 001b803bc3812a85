#include "galinv/coupling/coupling.hpp"

#include <stdexcept>

#include "galinv/calculus/power.hpp"
#include "galinv/exact/pauli.hpp"

namespace galinv {

namespace {

const ComplexRational I_(Rational(0), Rational(1));

NCExpr block_of(const NCExpr& e, std::size_t row, std::size_t col, std::size_t size) {
  NCExpr out(size);
  for (const auto& [w, m] : e.terms()) out.add(w, m.block(row, col, size, size));
  return out;
}

NCExpr laplacian(std::size_t dim) {
  NCExpr out(dim);
  for (int j = 1; j <= 3; ++j) out.add({NCSymbol::dx(j), NCSymbol::dx(j)}, identity_cr(dim));
  return out;
}

}  // namespace

NCExpr minimal_substitute_matrix(const DiffOp& op) {
  const std::size_t n = op.ncomp();
  const NCExpr dt = NCExpr::symbol(NCSymbol::dt(), n) + scale(I_, NCExpr::symbol(NCSymbol::potential(), n));
  std::array<NCExpr, 3> dx{NCExpr(n), NCExpr(n), NCExpr(n)};
  for (int j = 1; j <= 3; ++j) {
    dx[static_cast<std::size_t>(j - 1)] =
        NCExpr::symbol(NCSymbol::dx(j), n) - scale(I_, NCExpr::symbol(NCSymbol::vector_potential(j), n));
  }
  NCExpr out(n);
  for (const auto& [mi, m] : op.terms()) {
    NCExpr word = NCExpr::scalar(1, n);
    for (int k = 0; k < mi.a; ++k) word = word * dt;
    for (std::size_t j = 0; j < 3; ++j) {
      for (int k = 0; k < mi.b[j]; ++k) word = word * dx[j];
    }
    out += left_multiply(m, word);
  }
  return nc_normal_form(out);
}

CoupledPair minimal_substitute(const DiffOp& op) {
  if (op.ncomp() != 4) throw std::invalid_argument("coupled pair needs a four-component operator");
  if (op.order() > 1) throw std::invalid_argument("minimal substitution pair is defined for first-order operators");
  const NCExpr full = scale(I_, minimal_substitute_matrix(op));
  CoupledPair p;
  p.upper = {block_of(full, 0, 0, 2), block_of(full, 0, 2, 2)};
  p.lower = {block_of(full, 2, 0, 2), block_of(full, 2, 2, 2)};
  return p;
}

NCExpr eliminate_lower(const CoupledPair& pair, const Rational& m) {
  if (m == 0) throw std::domain_error("mass must be nonzero to eliminate chi");
  if (pair.upper.chi != NCExpr::scalar(ComplexRational(-2 * m))) {
    throw std::invalid_argument("upper equation is not of the form X phi - 2m chi = 0");
  }
  // chi = X phi / (2m)
  const NCExpr chi = scale(ComplexRational(1 / (2 * m)), pair.upper.phi);
  return nc_normal_form(pair.lower.phi + pair.lower.chi * chi);
}

std::array<NCExpr, 3> kinetic_momentum() {
  std::array<NCExpr, 3> pi{NCExpr(2), NCExpr(2), NCExpr(2)};
  for (int j = 1; j <= 3; ++j) {
    pi[static_cast<std::size_t>(j - 1)] =
        scale(I_, NCExpr::symbol(NCSymbol::dx(j))) + NCExpr::symbol(NCSymbol::vector_potential(j));
  }
  return pi;
}

NCExpr pauli_schrodinger_reference(const Rational& m) {
  const auto pi = kinetic_momentum();
  const NCExpr spin = scale(I_, pauli_dot(cross(pi, pi)));
  const NCExpr energy = scale(I_, NCExpr::symbol(NCSymbol::dt())) - NCExpr::symbol(NCSymbol::potential());
  return nc_normal_form(energy - scale(ComplexRational(1 / (2 * m)), dot(pi, pi) + spin));
}

NCExpr operator_block(const DiffOp& op, std::size_t row, std::size_t col, std::size_t size) {
  NCExpr out(size);
  for (const auto& [mi, m] : op.terms()) {
    Word w(static_cast<std::size_t>(mi.a), NCSymbol::dt());
    for (int j = 1; j <= 3; ++j) w.insert(w.end(), static_cast<std::size_t>(mi.b[static_cast<std::size_t>(j - 1)]), NCSymbol::dx(j));
    out.add(w, m.block(row, col, size, size));
  }
  return out;
}

CouplingDerivation derive_pauli_schrodinger(const Rational& m) {
  CouplingDerivation d;
  d.mass = m;
  const DiffOp L = levy_leblond_operator(m);
  d.pair = minimal_substitute(L);
  d.chi_of_phi = scale(ComplexRational(1 / (2 * m)), d.pair.upper.phi);
  d.result = eliminate_lower(d.pair, m);
  d.reference = pauli_schrodinger_reference(m);
  const auto pi = kinetic_momentum();
  d.spin_term = nc_normal_form(scale(I_, pauli_dot(cross(pi, pi))));
  d.matches_reference = d.result == d.reference;
  const NCExpr free = scale(I_, NCExpr::symbol(NCSymbol::dt())) + scale(ComplexRational(1 / (2 * m)), laplacian(2));
  d.free_limit = drop_fields(d.result) == free;
  d.constant_potential_spin_free = drop_vector_potential_derivatives(d.spin_term).is_zero();
  d.matches_square = projectively_equal(drop_fields(d.result), operator_block(op_power(L, 2), 0, 0, 2));
  return d;
}

}  // namespace galinv
