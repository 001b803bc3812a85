#include "galinv/exact/constraint_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace galinv {

SparseRow make_row(const std::map<UnknownId, ComplexRational>& coeffs) {
  SparseRow row;
  row.reserve(coeffs.size());
  for (const auto& [id, c] : coeffs) {
    if (!c.is_zero()) row.emplace_back(id, c);
  }
  return row;
}

void ConstraintSystem::add_row(const std::map<UnknownId, ComplexRational>& coeffs) { add_row(make_row(coeffs)); }

void ConstraintSystem::add_row(SparseRow row) {
  if (row.empty()) return;
  for (const auto& [id, c] : row) {
    if (id < 0 || static_cast<std::size_t>(id) >= unknowns.size()) {
      throw std::out_of_range("constraint row references unknown " + std::to_string(id));
    }
  }
  rows.push_back(std::move(row));
}

namespace {

/// y - f * x for sorted sparse rows.
SparseRow sub_scaled(const SparseRow& y, const ComplexRational& f, const SparseRow& x) {
  SparseRow out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(*iy++);
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, -(f * ix->second));
      ++ix;
    } else {
      ComplexRational v = iy->second - f * ix->second;
      if (!v.is_zero()) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  return out;
}

const ComplexRational* find_entry(const SparseRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

void normalize_leading(SparseRow& row) {
  if (row.empty()) return;
  const ComplexRational inv = ComplexRational(1) / row.front().second;
  for (auto& [c, v] : row) v *= inv;
}

/// Reduced echelon form built one row at a time.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ncols) : ncols_(ncols), pivot_index_(ncols, -1) {}

  /// Reduces a row against the current rows. Read-only, safe to call concurrently.
  SparseRow reduce(const SparseRow& row) const {
    SparseRow out = row;
    for (const auto& [col, val] : row) {
      const int idx = pivot_index_[static_cast<std::size_t>(col)];
      if (idx < 0) continue;
      // Pivot rows vanish on every other pivot column, so the original entry is the factor.
      out = sub_scaled(out, val, rows_[static_cast<std::size_t>(idx)]);
    }
    return out;
  }

  /// Inserts a nonzero row that is already reduced against the current rows.
  void insert(SparseRow row) {
    normalize_leading(row);
    const int col = row.front().first;
    for (auto& existing : rows_) {
      if (const ComplexRational* e = find_entry(existing, col)) {
        const ComplexRational f = *e;
        existing = sub_scaled(existing, f, row);
      }
    }
    pivot_index_[static_cast<std::size_t>(col)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
  }

  void reduce_and_insert(const SparseRow& row) {
    SparseRow r = reduce(row);
    if (!r.empty()) insert(std::move(r));
  }

  Echelon finish() && {
    Echelon e;
    e.ncols = ncols_;
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().first < rows_[b].front().first; });
    for (std::size_t k : order) {
      e.pivots.push_back(rows_[k].front().first);
      e.rows.push_back(std::move(rows_[k]));
    }
    return e;
  }

 private:
  std::size_t ncols_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_index_;
};

/// Drops zero rows and rows that are scalar multiples of an earlier row.
std::vector<SparseRow> distinct_rows(const std::vector<SparseRow>& rows, std::size_t ncols) {
  std::vector<SparseRow> out;
  std::set<SparseRow> seen;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    if (static_cast<std::size_t>(row.back().first) >= ncols) throw std::out_of_range("row column out of range");
    SparseRow n = row;
    normalize_leading(n);
    if (seen.insert(n).second) out.push_back(std::move(n));
  }
  return out;
}

}  // namespace

Echelon row_reduce(const std::vector<SparseRow>& rows, std::size_t ncols, Exec exec) {
  const std::vector<SparseRow> work = distinct_rows(rows, ncols);
  EchelonBuilder builder(ncols);
  if (exec == Exec::Serial) {
    for (const auto& row : work) builder.reduce_and_insert(row);
    return std::move(builder).finish();
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  const std::size_t batch = static_cast<std::size_t>(64 * std::max(threads, 1));
  std::vector<SparseRow> reduced;
  for (std::size_t start = 0; start < work.size(); start += batch) {
    const std::size_t end = std::min(work.size(), start + batch);
    reduced.assign(end - start, SparseRow{});
    const auto n = static_cast<std::ptrdiff_t>(end - start);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      reduced[static_cast<std::size_t>(k)] = builder.reduce(work[start + static_cast<std::size_t>(k)]);
    }
    // Survivors may depend on rows inserted earlier in this batch.
    for (auto& r : reduced) {
      if (!r.empty()) builder.reduce_and_insert(r);
    }
  }
  return std::move(builder).finish();
}

SparseRow reduce(const Echelon& e, const SparseRow& row) {
  SparseRow out = row;
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (const ComplexRational* x = find_entry(out, e.pivots[k])) {
      const ComplexRational f = *x;
      out = sub_scaled(out, f, e.rows[k]);
    }
  }
  return out;
}

Nullspace nullspace(const std::vector<SparseRow>& rows, std::size_t ncols, Exec exec) {
  const Echelon e = row_reduce(rows, ncols, exec);
  Nullspace ns;
  ns.rank = e.rank();
  ns.pivot_columns = e.pivots;
  std::vector<bool> is_pivot(ncols, false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    ns.free_columns.push_back(static_cast<int>(f));
    Vector v(ncols);
    v[f] = ComplexRational(1);
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      if (const ComplexRational* x = find_entry(e.rows[k], static_cast<int>(f))) {
        v[static_cast<std::size_t>(e.pivots[k])] = -*x;
      }
    }
    ns.basis.push_back(std::move(v));
  }
  return ns;
}

Nullspace nullspace(const ConstraintSystem& sys, Exec exec) {
  return nullspace(sys.rows, sys.unknown_count(), exec);
}

ComplexRational dot(const SparseRow& row, const Vector& x) {
  ComplexRational acc;
  for (const auto& [c, v] : row) acc += v * x.at(static_cast<std::size_t>(c));
  return acc;
}

bool satisfies(const ConstraintSystem& sys, const Vector& x) {
  return std::all_of(sys.rows.begin(), sys.rows.end(), [&](const SparseRow& r) { return dot(r, x).is_zero(); });
}

SparseRow to_sparse(const Vector& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) r.emplace_back(static_cast<int>(i), v[i]);
  }
  return r;
}

Vector to_dense(const SparseRow& r, std::size_t n) {
  Vector v(n);
  for (const auto& [c, x] : r) v.at(static_cast<std::size_t>(c)) = x;
  return v;
}

std::size_t rank_of(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<SparseRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(to_sparse(v));
  return row_reduce(rows, vectors.front().size(), Exec::Serial).rank();
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  std::vector<Vector> ext = basis;
  ext.push_back(v);
  return rank_of(ext) == rank_of(basis);
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = rank_of(both);
  return r == rank_of(a) && r == rank_of(b);
}

}  // namespace galinv
