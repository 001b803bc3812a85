#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galinv/exact/complex_rational.hpp"
#include "galinv/exact/linform.hpp"
#include "galinv/exact/vpoly.hpp"

namespace galinv {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over one of the exact scalar types
/// (ComplexRational, VPoly, LinForm). T{} must be the additive zero.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) { return Matrix(a.rows_, a.cols_) - a; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  /// Copy of the sub-block [r0, r0+nr) x [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    }
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("set_block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r) {
      for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    }
    return out;
  }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      std::ostringstream os;
      os << "matrix shape mismatch for '" << op << "': " << rows_ << "x" << cols_ << " vs " << o.rows_ << "x"
         << o.cols_;
      throw DimensionError(os.str());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatrixCR = Matrix<ComplexRational>;
using MatrixVP = Matrix<VPoly>;
using MatrixLF = Matrix<LinForm>;

template <class A, class B>
using product_t = decltype(std::declval<const A&>() * std::declval<const B&>());

template <class A, class B>
Matrix<product_t<A, B>> operator*(const Matrix<A>& a, const Matrix<B>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  Matrix<product_t<A, B>> out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const A& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const B& y = b(k, c);
        if (y.is_zero()) continue;
        out(r, c) += x * y;
      }
    }
  }
  return out;
}

/// Scalar times matrix.
template <class S, class T>
Matrix<product_t<S, T>> scale(const S& s, const Matrix<T>& m) {
  Matrix<product_t<S, T>> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) out(r, c) = s * m(r, c);
    }
  }
  return out;
}

template <class U, class T>
Matrix<U> convert(const Matrix<T>& m) {
  return m.map([](const T& x) { return U(x); });
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.is_square() || !b.is_square()) throw DimensionError("commutator requires square matrices");
  return a * b - b * a;
}

template <class T>
Matrix<T> anticommutator(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.is_square() || !b.is_square()) throw DimensionError("anticommutator requires square matrices");
  return a * b + b * a;
}

/// Conjugate transpose.
MatrixCR dagger(const MatrixCR& m);

ComplexRational trace(const MatrixCR& m);

/// Kronecker product.
MatrixCR kron(const MatrixCR& a, const MatrixCR& b);

/// Assembles [[a, b], [c, d]] from equally sized square blocks.
MatrixCR from_blocks(const MatrixCR& a, const MatrixCR& b, const MatrixCR& c, const MatrixCR& d);

/// Evaluates every polynomial entry at a concrete v.
MatrixCR evaluate(const MatrixVP& m, const std::array<ComplexRational, 3>& v);

std::string to_string(const MatrixCR& m);

}  // namespace galinv
