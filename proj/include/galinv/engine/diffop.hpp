#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "galinv/exact/matrix.hpp"

namespace galinv {

/// Derivative monomial d_t^a d_1^b1 d_2^b2 d_3^b3.
struct MultiIndex {
  int a = 0;
  std::array<int, 3> b{0, 0, 0};

  static MultiIndex dt(int n = 1) { return {n, {0, 0, 0}}; }
  /// d_j^n, j in {1,2,3}.
  static MultiIndex dx(int j, int n = 1);

  int space_order() const { return b[0] + b[1] + b[2]; }
  int order() const { return a + space_order(); }
  bool is_mixed() const { return a > 0 && space_order() > 0; }
  /// "t1x000" style label.
  std::string label() const;

  friend MultiIndex operator+(const MultiIndex& x, const MultiIndex& y) {
    return {x.a + y.a, {x.b[0] + y.b[0], x.b[1] + y.b[1], x.b[2] + y.b[2]}};
  }
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Canonical term order: higher total order first, then higher time order,
/// then space exponents descending lexicographically.
bool operator<(const MultiIndex& x, const MultiIndex& y);

/// All multi-indices of total order exactly n, in canonical order.
std::vector<MultiIndex> multi_indices_of_order(int n);

/// Linear differential operator sum_mi C_mi d^mi with constant ncomp x ncomp coefficients.
template <class T>
class DiffOpT {
 public:
  using Terms = std::map<MultiIndex, Matrix<T>>;

  DiffOpT() = default;
  explicit DiffOpT(std::size_t ncomp) : ncomp_(ncomp) {}

  std::size_t ncomp() const { return ncomp_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  int order() const {
    int o = 0;
    for (const auto& [mi, m] : terms_) o = std::max(o, mi.order());
    return o;
  }

  /// Coefficient of d^mi, zero matrix if absent.
  Matrix<T> coefficient(const MultiIndex& mi) const {
    auto it = terms_.find(mi);
    return it == terms_.end() ? Matrix<T>(ncomp_, ncomp_) : it->second;
  }

  /// Accumulates m into the coefficient of d^mi; zero coefficients are dropped.
  void add(const MultiIndex& mi, const Matrix<T>& m) {
    check(m);
    auto it = terms_.find(mi);
    if (it == terms_.end()) {
      if (!m.is_zero()) terms_.emplace(mi, m);
      return;
    }
    it->second += m;
    if (it->second.is_zero()) terms_.erase(it);
  }

  void set(const MultiIndex& mi, const Matrix<T>& m) {
    check(m);
    terms_.erase(mi);
    if (!m.is_zero()) terms_.emplace(mi, m);
  }

  DiffOpT& operator+=(const DiffOpT& o) {
    require_ncomp(o);
    for (const auto& [mi, m] : o.terms_) add(mi, m);
    return *this;
  }
  DiffOpT& operator-=(const DiffOpT& o) {
    require_ncomp(o);
    for (const auto& [mi, m] : o.terms_) add(mi, -m);
    return *this;
  }
  friend DiffOpT operator+(DiffOpT x, const DiffOpT& y) { return x += y; }
  friend DiffOpT operator-(DiffOpT x, const DiffOpT& y) { return x -= y; }
  friend bool operator==(const DiffOpT& x, const DiffOpT& y) {
    return x.ncomp_ == y.ncomp_ && x.terms_ == y.terms_;
  }

  template <class F>
  auto map(F&& f) const -> DiffOpT<decltype(f(std::declval<const T&>()))> {
    DiffOpT<decltype(f(std::declval<const T&>()))> out(ncomp_);
    for (const auto& [mi, m] : terms_) out.add(mi, m.map(f));
    return out;
  }

 private:
  void check(const Matrix<T>& m) const {
    if (m.rows() != ncomp_ || m.cols() != ncomp_) {
      throw DimensionError("operator coefficient must be " + std::to_string(ncomp_) + "x" + std::to_string(ncomp_));
    }
  }
  void require_ncomp(const DiffOpT& o) const {
    if (o.ncomp_ != ncomp_) throw DimensionError("operators act on different spinor sizes");
  }

  std::size_t ncomp_ = 0;
  Terms terms_;
};

using DiffOp = DiffOpT<ComplexRational>;
using DiffOpVP = DiffOpT<VPoly>;
using DiffOpLF = DiffOpT<LinForm>;

DiffOp scale(const ComplexRational& s, const DiffOp& op);
/// M * op, multiplying every coefficient from the left.
DiffOp left_multiply(const MatrixCR& m, const DiffOp& op);
DiffOpVP to_vpoly(const DiffOp& op);
/// Returns the operator if every entry is a constant polynomial; throws otherwise.
DiffOp to_constant(const DiffOpVP& op);
DiffOp evaluate(const DiffOpVP& op, const std::array<ComplexRational, 3>& v);

/// Terms with both time and space derivatives.
std::vector<MultiIndex> mixed_term_report(const DiffOp& op);

/// True if op = c * other for some nonzero c (and both nonzero).
bool projectively_equal(const DiffOp& op, const DiffOp& other);

std::string to_string(const DiffOp& op);

}  // namespace galinv
