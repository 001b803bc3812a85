#include "galinv/engine/family.hpp"

#include <stdexcept>

#include "galinv/exact/pauli.hpp"

namespace galinv {

namespace {

std::vector<SparseRow> to_rows(const std::vector<Vector>& vs) {
  std::vector<SparseRow> rows;
  rows.reserve(vs.size());
  for (const auto& v : vs) rows.push_back(to_sparse(v));
  return rows;
}

std::vector<Vector> to_vectors(const Echelon& e) {
  std::vector<Vector> out;
  for (const auto& r : e.rows) out.push_back(to_dense(r, e.ncols));
  return out;
}

struct Weights {
  ComplexRational dt;        // lower-left of the d_t coefficient
  ComplexRational dx;        // upper-left (0,1) entry of the d_1 coefficient
  ComplexRational constant;  // upper-right of the zeroth-order coefficient
  bool lower_left_only = false;
};

Weights read_weights(const DiffOp& op) {
  const std::size_t n = op.ncomp();
  const std::size_t h = n / 2;
  const MatrixCR b1 = op.coefficient(MultiIndex::dt());
  Weights w;
  w.dt = b1(h, 0);
  w.dx = op.coefficient(MultiIndex::dx(1))(0, 1);
  w.constant = op.coefficient(MultiIndex{})(0, h);
  w.lower_left_only = !b1.block(h, 0, h, h).is_zero() && b1.block(0, 0, h, n).is_zero() && b1.block(h, h, h, h).is_zero();
  return w;
}

GeneratorSet with_boost(const GeneratorTriple& rot, const GeneratorTriple& boost, const ComplexRational& lambda) {
  GeneratorSet g;
  g.rotation = rot;
  g.boost = boost;
  g.family_parameter = lambda;
  return g;
}

}  // namespace

std::vector<TransformContext> generating_contexts(const GeneratorSet& gens, const Rational& mass) {
  std::vector<TransformContext> ctxs;
  for (int k = 1; k <= 3; ++k) ctxs.push_back(rotation_generator_context(gens, k, mass));
  for (int k = 1; k <= 3; ++k) ctxs.push_back(axis_boost_context(gens, k, mass));
  return ctxs;
}

std::vector<Vector> degenerate_subspace(const Ansatz& ansatz, const GeneratorSet& gens, const std::vector<Vector>& raw) {
  const std::size_t n = ansatz.ncomp();
  std::vector<MatrixCR> action(gens.rotation.begin(), gens.rotation.end());
  for (const auto& x : gens.effective_boost()) {
    if (!x.is_zero()) action.push_back(x);
  }
  const std::vector<MatrixCR> comm = commutant(action, n);
  const std::vector<MatrixCR> rad = algebra_radical(comm);

  std::vector<Vector> w;
  for (const auto& c : comm) {
    DiffOp op(n);
    op.set(MultiIndex{}, c);
    w.push_back(ansatz.to_vector(op));
  }
  for (const auto& r : rad) {
    for (const auto& v : raw) {
      const DiffOp op = left_multiply(r, ansatz.to_operator(v));
      if (!op.is_zero()) w.push_back(ansatz.to_vector(op));
    }
  }
  if (w.empty()) return w;
  return to_vectors(row_reduce(to_rows(w), ansatz.unknown_count(), Exec::Serial));
}

std::vector<Vector> reduce_modulo(const std::vector<Vector>& vectors, const std::vector<Vector>& subspace,
                                  std::size_t dim) {
  const Echelon ew = row_reduce(to_rows(subspace), dim, Exec::Serial);
  std::vector<SparseRow> rem;
  for (const auto& v : vectors) rem.push_back(reduce(ew, to_sparse(v)));
  return to_vectors(row_reduce(rem, dim, Exec::Serial));
}

bool contained_modulo(const std::vector<Vector>& a, const std::vector<Vector>& b, const std::vector<Vector>& extra) {
  std::vector<Vector> base = b;
  base.insert(base.end(), extra.begin(), extra.end());
  if (base.empty()) {
    for (const auto& v : a) {
      for (const auto& x : v) {
        if (!x.is_zero()) return false;
      }
    }
    return true;
  }
  std::vector<Vector> both = base;
  both.insert(both.end(), a.begin(), a.end());
  return rank_of(both) == rank_of(base);
}

FamilySolution solve_family(const Ansatz& ansatz, const GeneratorSet& gens, const Rational& mass, Exec exec) {
  const DerivedConstraints dc = derive_constraints(ansatz, generating_contexts(gens, mass), exec);
  const Nullspace ns = nullspace(dc.system, exec);
  FamilySolution sol;
  sol.constraint_rows = dc.system.rows.size();
  sol.rank = ns.rank;
  sol.raw = ns.basis;
  sol.degenerate = degenerate_subspace(ansatz, gens, sol.raw);
  sol.reduced = reduce_modulo(sol.raw, sol.degenerate, ansatz.unknown_count());
  return sol;
}

BoostRepresentation calibrated_representation(std::size_t ncomp, const Rational& mass, Exec exec) {
  BoostRepresentation rep;
  const GeneratorTriple rot = standard_rotation_generators(static_cast<int>(ncomp));
  rep.solution = solve_boost_generators(rot);
  rep.generators = with_boost(rot, zero_triple(ncomp), ComplexRational(0));
  if (rep.solution.commuting.empty()) {
    rep.calibration.verified = true;
    return rep;
  }

  const Ansatz first(ncomp, 1, false);
  for (std::size_t idx : rep.solution.commuting) {
    const GeneratorTriple& cand = rep.solution.basis[idx];
    const FamilySolution trial = solve_family(first, with_boost(rot, cand, 1), mass, exec);
    if (trial.reduced.size() != 1) {
      rep.calibration.rejected_candidates.push_back(idx);
      continue;
    }
    const Weights w = read_weights(first.to_operator(trial.reduced[0]));
    if (!w.lower_left_only || w.dt.is_zero() || w.dx.is_zero()) {
      rep.calibration.rejected_candidates.push_back(idx);
      continue;
    }
    BoostCalibration& cal = rep.calibration;
    cal.trivial = false;
    cal.candidate = idx;
    cal.trial_ratio = w.dx / w.dt;
    cal.lambda = cal.trial_ratio;
    rep.generators = with_boost(rot, cand, cal.lambda);

    const FamilySolution fin = solve_family(first, rep.generators, mass, exec);
    if (fin.reduced.size() == 1) {
      const Weights c = read_weights(first.to_operator(fin.reduced[0]));
      cal.verified = c.lower_left_only && c.dx == c.dt;
      cal.constant_block_matches = c.constant == ComplexRational(Rational(0), 2 * mass) * c.dt;
    }
    return rep;
  }
  // No candidate produced an oriented family: keep the trivial representation.
  return rep;
}

FamilyReport invariant_family(const FamilyOptions& options) {
  if (options.ncomp != 1 && options.ncomp != 2 && options.ncomp != 4) {
    throw std::invalid_argument("unsupported spinor dimension " + std::to_string(options.ncomp));
  }
  if (options.order < 1) throw std::invalid_argument("order must be at least 1");
  if (options.mass <= 0) throw std::invalid_argument("mass must be positive");

  const BoostRepresentation rep = calibrated_representation(options.ncomp, options.mass, options.exec);
  FamilyReport report;
  report.options = options;
  report.ansatz = Ansatz(options.ncomp, options.order, options.forbid_mixed);
  report.generators = rep.generators;
  report.calibration = rep.calibration;

  const auto ctxs = generating_contexts(rep.generators, options.mass);
  const DerivedConstraints dc = derive_constraints(report.ansatz, ctxs, options.exec);
  const Nullspace ns = nullspace(dc.system, options.exec);
  report.context_labels = dc.context_labels;
  report.rows_per_context.assign(ctxs.size(), 0);
  for (const auto& k : dc.keys) ++report.rows_per_context[static_cast<std::size_t>(k.context)];
  report.unknowns = report.ansatz.unknown_count();
  report.constraint_rows = dc.system.rows.size();
  report.rank = ns.rank;

  const auto degenerate = degenerate_subspace(report.ansatz, rep.generators, ns.basis);
  const auto reduced = reduce_modulo(ns.basis, degenerate, report.unknowns);
  for (const auto& v : ns.basis) report.raw_basis.push_back(report.ansatz.to_operator(v));
  for (const auto& v : degenerate) report.degenerate_basis.push_back(report.ansatz.to_operator(v));
  for (const auto& v : reduced) report.family.push_back(report.ansatz.to_operator(v));
  return report;
}

}  // namespace galinv
