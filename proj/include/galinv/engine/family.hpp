#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galinv/engine/constraints.hpp"

namespace galinv {

/// How the free scale of the boost generators was fixed.
///
/// Any nonzero scale gives an equivalent representation, so a nonempty family
/// exists for every choice. The scale is instead chosen so the invariant
/// first-order operator has equal d_t (lower-left) and d_1 (upper-left sigma_1)
/// weights; the d-free upper-right block is then checked against 2 i m.
struct BoostCalibration {
  /// No commuting boost generators exist; boosts act only through the phase.
  bool trivial = true;
  /// Index of the chosen candidate in BoostSolution::basis.
  std::size_t candidate = 0;
  std::vector<std::size_t> rejected_candidates;
  /// Weight ratio at trial scale 1.
  ComplexRational trial_ratio;
  ComplexRational lambda;
  /// Upper-right zeroth-order block equals 2 i m times the d_t weight.
  bool constant_block_matches = false;
  /// The calibrated first-order family is one-dimensional with ratio 1.
  bool verified = false;
};

struct BoostRepresentation {
  GeneratorSet generators;
  BoostSolution solution;
  BoostCalibration calibration;
};

/// Standard rotation generators for ncomp plus calibrated boost generators.
BoostRepresentation calibrated_representation(std::size_t ncomp, const Rational& mass, Exec exec = Exec::Parallel);

/// Three linearized rotation generators followed by three single-axis symbolic boosts.
std::vector<TransformContext> generating_contexts(const GeneratorSet& gens, const Rational& mass);

struct FamilyOptions {
  std::size_t ncomp = 4;
  int order = 1;
  bool forbid_mixed = false;
  Rational mass{1};
  Exec exec = Exec::Parallel;
};

/// Raw nullspace of the invariance conditions plus its reduction modulo the
/// degenerate subspace W: zeroth-order operators in the commutant of the
/// representation, and radical(commutant) times any raw solution.
struct FamilySolution {
  std::vector<Vector> raw;
  std::vector<Vector> degenerate;
  /// RREF basis of raw / W; leading entries are 1.
  std::vector<Vector> reduced;
  std::size_t constraint_rows = 0;
  std::size_t rank = 0;
};

FamilySolution solve_family(const Ansatz& ansatz, const GeneratorSet& gens, const Rational& mass, Exec exec);

struct FamilyReport {
  FamilyOptions options;
  Ansatz ansatz{1, 0, false};
  GeneratorSet generators;
  BoostCalibration calibration;
  std::vector<std::string> context_labels;
  std::vector<std::size_t> rows_per_context;
  std::size_t unknowns = 0;
  std::size_t constraint_rows = 0;
  std::size_t rank = 0;
  std::vector<DiffOp> raw_basis;
  std::vector<DiffOp> degenerate_basis;
  std::vector<DiffOp> family;

  std::size_t dimension() const { return family.size(); }
};

/// Throws std::invalid_argument for unsupported ncomp, order < 1 or mass <= 0.
FamilyReport invariant_family(const FamilyOptions& options);

/// Basis of the degenerate subspace for a raw solution set.
std::vector<Vector> degenerate_subspace(const Ansatz& ansatz, const GeneratorSet& gens, const std::vector<Vector>& raw);

/// RREF basis of span(vectors) reduced modulo span(subspace).
std::vector<Vector> reduce_modulo(const std::vector<Vector>& vectors, const std::vector<Vector>& subspace,
                                  std::size_t dim);

/// span(a) is contained in span(b + extra).
bool contained_modulo(const std::vector<Vector>& a, const std::vector<Vector>& b, const std::vector<Vector>& extra);

}  // namespace galinv
