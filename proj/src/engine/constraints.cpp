#include "galinv/engine/constraints.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace galinv {

Ansatz::Ansatz(std::size_t ncomp, int order, bool forbid_mixed)
    : ncomp_(ncomp), order_(order), forbid_mixed_(forbid_mixed) {
  if (ncomp == 0) throw std::invalid_argument("ansatz needs at least one component");
  if (order < 0) throw std::invalid_argument("ansatz order must be non-negative");
  for (int n = order; n >= 0; --n) {
    for (const auto& mi : multi_indices_of_order(n)) {
      if (!(forbid_mixed && mi.is_mixed())) slots_.push_back(mi);
    }
  }
}

UnknownId Ansatz::id(std::size_t slot, std::size_t row, std::size_t col) const {
  return static_cast<UnknownId>(slot * ncomp_ * ncomp_ + row * ncomp_ + col);
}

std::vector<std::string> Ansatz::names() const {
  std::vector<std::string> out;
  out.reserve(unknown_count());
  for (const auto& mi : slots_) {
    for (std::size_t r = 0; r < ncomp_; ++r) {
      for (std::size_t c = 0; c < ncomp_; ++c) out.push_back("B" + mi.label() + "_" + std::to_string(r) + std::to_string(c));
    }
  }
  return out;
}

int Ansatz::slot_of(const MultiIndex& mi) const {
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (slots_[s] == mi) return static_cast<int>(s);
  }
  return -1;
}

DiffOpLF Ansatz::symbolic() const {
  DiffOpLF op(ncomp_);
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    MatrixLF m(ncomp_, ncomp_);
    for (std::size_t r = 0; r < ncomp_; ++r) {
      for (std::size_t c = 0; c < ncomp_; ++c) m(r, c) = LinForm::unknown(id(s, r, c));
    }
    op.set(slots_[s], m);
  }
  return op;
}

DiffOp Ansatz::to_operator(const Vector& x) const {
  if (x.size() != unknown_count()) throw DimensionError("vector length does not match ansatz");
  DiffOp op(ncomp_);
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    MatrixCR m(ncomp_, ncomp_);
    for (std::size_t r = 0; r < ncomp_; ++r) {
      for (std::size_t c = 0; c < ncomp_; ++c) m(r, c) = x[static_cast<std::size_t>(id(s, r, c))];
    }
    op.set(slots_[s], m);
  }
  return op;
}

Vector Ansatz::to_vector(const DiffOp& op) const {
  if (op.ncomp() != ncomp_) throw DimensionError("operator size does not match ansatz");
  Vector x(unknown_count());
  for (const auto& [mi, m] : op.terms()) {
    const int s = slot_of(mi);
    if (s < 0) throw DimensionError("operator term " + mi.label() + " is outside the ansatz");
    for (std::size_t r = 0; r < ncomp_; ++r) {
      for (std::size_t c = 0; c < ncomp_; ++c) x[static_cast<std::size_t>(id(static_cast<std::size_t>(s), r, c))] = m(r, c);
    }
  }
  return x;
}

bool operator<(const RowKey& x, const RowKey& y) {
  if (x.context != y.context) return x.context < y.context;
  if (!(x.term == y.term)) return x.term < y.term;
  return std::tie(x.row, x.col, x.monomial) < std::tie(y.row, y.col, y.monomial);
}

namespace {

using RowMap = std::map<RowKey, std::map<UnknownId, ComplexRational>>;

DerivedConstraints finish(const Ansatz& ansatz, const std::vector<TransformContext>& contexts, RowMap rows) {
  DerivedConstraints out;
  out.system.unknowns = ansatz.names();
  for (const auto& ctx : contexts) out.context_labels.push_back(ctx.label);
  for (auto& [key, coeffs] : rows) {
    SparseRow r = make_row(coeffs);
    if (r.empty()) continue;
    out.system.add_row(std::move(r));
    out.keys.push_back(key);
  }
  return out;
}

void check_contexts(const Ansatz& ansatz, const std::vector<TransformContext>& contexts) {
  for (const auto& ctx : contexts) {
    if (ctx.ncomp() != ansatz.ncomp()) throw DimensionError("context '" + ctx.label + "' has the wrong spinor size");
  }
}

DerivedConstraints derive_serial(const Ansatz& ansatz, const std::vector<TransformContext>& contexts) {
  const DiffOpLF op = ansatz.symbolic();
  RowMap rows;
  for (std::size_t k = 0; k < contexts.size(); ++k) {
    const TransformContext& ctx = contexts[k];
    const DiffOpLF diff = transform_operator(op, ctx) - op;
    for (const auto& [mi, m] : diff.terms()) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          for (const auto& [mono, slice] : collect_v(m(r, c))) {
            if (!slice.constant.is_zero()) throw std::logic_error("homogeneous ansatz produced a constant term");
            if (ctx.linearized && mono != Monomial{1, 0, 0}) continue;
            RowKey key{static_cast<int>(k), mi, static_cast<int>(r), static_cast<int>(c), mono};
            rows[key] = slice.coeffs;
          }
        }
      }
    }
  }
  return finish(ansatz, contexts, std::move(rows));
}

struct Entry {
  RowKey key;
  ComplexRational value;
};

DerivedConstraints derive_parallel(const Ansatz& ansatz, const std::vector<TransformContext>& contexts) {
  const std::size_t n = ansatz.ncomp();
  const auto total = static_cast<std::ptrdiff_t>(ansatz.unknown_count());
  std::vector<std::vector<Entry>> columns(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t u = 0; u < total; ++u) {
    const auto uu = static_cast<std::size_t>(u);
    const std::size_t slot = uu / (n * n);
    const std::size_t r0 = (uu / n) % n;
    const std::size_t c0 = uu % n;
    DiffOpVP unit(n);
    MatrixVP e(n, n);
    e(r0, c0) = VPoly(1);
    unit.set(ansatz.slots()[slot], e);
    std::vector<Entry>& col = columns[uu];
    for (std::size_t k = 0; k < contexts.size(); ++k) {
      const TransformContext& ctx = contexts[k];
      const DiffOpVP diff = transform_operator(unit, ctx) - unit;
      for (const auto& [mi, m] : diff.terms()) {
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) {
            for (const auto& [mono, coeff] : m(r, c).terms()) {
              if (ctx.linearized && mono != Monomial{1, 0, 0}) continue;
              col.push_back({{static_cast<int>(k), mi, static_cast<int>(r), static_cast<int>(c), mono}, coeff});
            }
          }
        }
      }
    }
  }

  RowMap rows;
  for (std::size_t u = 0; u < columns.size(); ++u) {
    for (auto& e : columns[u]) rows[e.key].emplace(static_cast<UnknownId>(u), std::move(e.value));
  }
  return finish(ansatz, contexts, std::move(rows));
}

}  // namespace

DerivedConstraints derive_constraints(const Ansatz& ansatz, const std::vector<TransformContext>& contexts, Exec exec) {
  check_contexts(ansatz, contexts);
  return exec == Exec::Serial ? derive_serial(ansatz, contexts) : derive_parallel(ansatz, contexts);
}

}  // namespace galinv
