#pragma once

#include <string>
#include <vector>

#include "galinv/engine/diffop.hpp"
#include "galinv/engine/transform.hpp"
#include "galinv/exact/constraint_system.hpp"

namespace galinv {

/// General operator of bounded order whose coefficient entries are all unknowns.
/// Unknown id = slot * n^2 + row * n + col, slots in canonical term order.
class Ansatz {
 public:
  Ansatz(std::size_t ncomp, int order, bool forbid_mixed);

  std::size_t ncomp() const { return ncomp_; }
  int order() const { return order_; }
  bool forbid_mixed() const { return forbid_mixed_; }
  const std::vector<MultiIndex>& slots() const { return slots_; }
  std::size_t unknown_count() const { return slots_.size() * ncomp_ * ncomp_; }

  UnknownId id(std::size_t slot, std::size_t row, std::size_t col) const;
  /// "B<slot label>_<row><col>".
  std::vector<std::string> names() const;
  /// Slot position of mi, or -1.
  int slot_of(const MultiIndex& mi) const;

  DiffOpLF symbolic() const;
  DiffOp to_operator(const Vector& x) const;
  /// Throws DimensionError if op has a term outside the slots.
  Vector to_vector(const DiffOp& op) const;

 private:
  std::size_t ncomp_;
  int order_;
  bool forbid_mixed_;
  std::vector<MultiIndex> slots_;
};

/// Origin of one constraint row: context, transformed term, matrix entry, v-monomial.
struct RowKey {
  int context = 0;
  MultiIndex term;
  int row = 0;
  int col = 0;
  Monomial monomial{0, 0, 0};

  friend bool operator==(const RowKey&, const RowKey&) = default;
};
bool operator<(const RowKey& x, const RowKey& y);

struct DerivedConstraints {
  ConstraintSystem system;
  /// keys[k] is the origin of system.rows[k]; rows are sorted by key.
  std::vector<RowKey> keys;
  std::vector<std::string> context_labels;

  /// Rows whose key satisfies pred.
  template <class Pred>
  std::vector<SparseRow> select(Pred&& pred) const {
    std::vector<SparseRow> out;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      if (pred(keys[k])) out.push_back(system.rows[k]);
    }
    return out;
  }
};

/// Rows of transform(ansatz) - ansatz = 0 for every context, one per
/// (context, term, entry, v-monomial). Serial expands the symbolic ansatz
/// once per context; Parallel transforms one unit operator per unknown
/// concurrently. Both return the identical system.
DerivedConstraints derive_constraints(const Ansatz& ansatz, const std::vector<TransformContext>& contexts,
                                      Exec exec = Exec::Parallel);

}  // namespace galinv
