#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "galinv/exact/complex_rational.hpp"
#include "galinv/exact/linform.hpp"

namespace galinv {

/// Sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<int, ComplexRational>>;
using Vector = std::vector<ComplexRational>;

SparseRow make_row(const std::map<UnknownId, ComplexRational>& coeffs);

/// Homogeneous linear system: every row r encodes sum_j r_j x_j = 0.
struct ConstraintSystem {
  std::vector<std::string> unknowns;
  std::vector<SparseRow> rows;

  std::size_t unknown_count() const { return unknowns.size(); }
  /// Appends a row; all-zero rows are dropped.
  void add_row(const std::map<UnknownId, ComplexRational>& coeffs);
  void add_row(SparseRow row);
};

enum class Exec {
  /// Row-at-a-time insertion into a reduced echelon form. Reference path.
  Serial,
  /// Batches of rows reduced concurrently (OpenMP) against the frozen echelon form.
  Parallel,
};

/// Reduced row echelon form. rows[k] has its leading 1 in pivots[k]; pivots ascend.
struct Echelon {
  std::size_t ncols = 0;
  std::vector<SparseRow> rows;
  std::vector<int> pivots;

  std::size_t rank() const { return rows.size(); }
  friend bool operator==(const Echelon&, const Echelon&) = default;
};

Echelon row_reduce(const std::vector<SparseRow>& rows, std::size_t ncols, Exec exec = Exec::Parallel);

/// Remainder of row after eliminating every pivot column of e.
SparseRow reduce(const Echelon& e, const SparseRow& row);

struct Nullspace {
  /// One vector per free column, with a 1 in that column.
  std::vector<Vector> basis;
  std::size_t rank = 0;
  std::vector<int> pivot_columns;
  std::vector<int> free_columns;

  std::size_t dimension() const { return basis.size(); }
};

/// Exact nullspace. Pivoting: leftmost nonzero column, smallest row index.
/// The result is the unique RREF-derived basis, independent of exec.
Nullspace nullspace(const ConstraintSystem& sys, Exec exec = Exec::Parallel);
Nullspace nullspace(const std::vector<SparseRow>& rows, std::size_t ncols, Exec exec = Exec::Parallel);

ComplexRational dot(const SparseRow& row, const Vector& x);
bool satisfies(const ConstraintSystem& sys, const Vector& x);

SparseRow to_sparse(const Vector& v);
Vector to_dense(const SparseRow& r, std::size_t n);

/// Rank of a set of dense vectors of equal length.
std::size_t rank_of(const std::vector<Vector>& vectors);
bool in_span(const std::vector<Vector>& basis, const Vector& v);
/// Same span (as subspaces of Q(i)^n).
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b);

}  // namespace galinv
