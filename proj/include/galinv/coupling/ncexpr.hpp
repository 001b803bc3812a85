#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "galinv/exact/matrix.hpp"

namespace galinv {

/// Atom of a noncommutative operator word.
struct NCSymbol {
  enum class Kind {
    Dt,  // d_t
    Dx,  // d_j
    V,   // scalar potential
    A,   // vector potential A_j
    DV,  // (d_mu V), mu = 0 for t
    DA,  // (d_mu A_j)
  };
  Kind kind = Kind::Dt;
  int j = 0;
  int mu = 0;

  static NCSymbol dt() { return {Kind::Dt, 0, 0}; }
  static NCSymbol dx(int j) { return {Kind::Dx, j, 0}; }
  static NCSymbol potential() { return {Kind::V, 0, 0}; }
  static NCSymbol vector_potential(int j) { return {Kind::A, j, 0}; }

  bool is_derivative() const { return kind == Kind::Dt || kind == Kind::Dx; }
  bool is_field() const { return !is_derivative(); }
  bool is_field_derivative() const { return kind == Kind::DV || kind == Kind::DA; }

  /// "dt", "d2", "V", "A3", "dtV", "d1A2".
  std::string name() const;
  std::string latex() const;

  friend auto operator<=>(const NCSymbol&, const NCSymbol&) = default;
};

using Word = std::vector<NCSymbol>;

/// Sum of (matrix coefficient) x (ordered word). Coefficients are dim x dim
/// constant matrices and commute with every symbol.
class NCExpr {
 public:
  using Terms = std::map<Word, MatrixCR>;

  explicit NCExpr(std::size_t dim = 2) : dim_(dim) {}

  static NCExpr constant(const MatrixCR& m);
  static NCExpr scalar(const ComplexRational& c, std::size_t dim = 2);
  static NCExpr symbol(const NCSymbol& s, std::size_t dim = 2);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MatrixCR coefficient(const Word& w) const;

  void add(const Word& w, const MatrixCR& m);

  NCExpr& operator+=(const NCExpr& o);
  NCExpr& operator-=(const NCExpr& o);
  friend NCExpr operator+(NCExpr a, const NCExpr& b) { return a += b; }
  friend NCExpr operator-(NCExpr a, const NCExpr& b) { return a -= b; }
  friend NCExpr operator*(const NCExpr& a, const NCExpr& b);
  friend bool operator==(const NCExpr& a, const NCExpr& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

 private:
  std::size_t dim_;
  Terms terms_;
};

NCExpr scale(const ComplexRational& c, const NCExpr& e);
NCExpr left_multiply(const MatrixCR& m, const NCExpr& e);

/// Thrown when a derivative would act on a field derivative.
class SecondFieldDerivative : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Moves every derivative right of every field with d F -> F d + (dF), then
/// sorts the commuting field and derivative blocks.
NCExpr nc_normal_form(const NCExpr& e);

/// sum_j sigma_j a_j for scalar (dim 2) components.
NCExpr pauli_dot(const std::array<NCExpr, 3>& a);

/// (a x b)_i = eps_ijk a_j b_k, order kept.
std::array<NCExpr, 3> cross(const std::array<NCExpr, 3>& a, const std::array<NCExpr, 3>& b);

/// sum_j a_j b_j, order kept.
NCExpr dot(const std::array<NCExpr, 3>& a, const std::array<NCExpr, 3>& b);

/// Drops every term containing a field symbol (V = A = 0).
NCExpr drop_fields(const NCExpr& e);

/// Drops every term containing a derivative of A (constant vector potential).
NCExpr drop_vector_potential_derivatives(const NCExpr& e);

/// a = c b for some nonzero c.
bool projectively_equal(const NCExpr& a, const NCExpr& b);

std::string to_latex(const NCExpr& e);
std::string to_string(const NCExpr& e);

}  // namespace galinv
