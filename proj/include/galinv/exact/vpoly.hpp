#pragma once

#include <array>
#include <map>
#include <string>

#include "galinv/exact/complex_rational.hpp"

namespace galinv {

/// Exponents of (v1, v2, v3).
using Monomial = std::array<int, 3>;

inline int total_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }

/// Sparse polynomial in the boost indeterminates v1, v2, v3 over Q(i).
/// Zero coefficients are never stored.
class VPoly {
 public:
  using Terms = std::map<Monomial, ComplexRational>;

  VPoly() = default;
  VPoly(const ComplexRational& c);  // NOLINT: constants promote implicitly
  VPoly(int c) : VPoly(ComplexRational(c)) {}  // NOLINT

  /// The indeterminate v_{k+1}, k in {0,1,2}.
  static VPoly var(int k);
  static VPoly monomial(const Monomial& m, const ComplexRational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient.
  ComplexRational constant() const { return coefficient({0, 0, 0}); }
  ComplexRational coefficient(const Monomial& m) const;
  int degree() const;

  void add_term(const Monomial& m, const ComplexRational& c);

  VPoly& operator+=(const VPoly& o);
  VPoly& operator-=(const VPoly& o);
  VPoly& operator*=(const VPoly& o);
  VPoly& operator*=(const ComplexRational& c);

  friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
  friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
  friend VPoly operator-(const VPoly& a) { return VPoly() - a; }
  friend VPoly operator*(const VPoly& a, const VPoly& b);
  friend VPoly operator*(VPoly a, const ComplexRational& c) { return a *= c; }
  friend VPoly operator*(const ComplexRational& c, VPoly a) { return a *= c; }

  friend bool operator==(const VPoly& a, const VPoly& b) { return a.terms_ == b.terms_; }

  ComplexRational evaluate(const std::array<ComplexRational, 3>& v) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

VPoly pow(const VPoly& p, int n);

}  // namespace galinv
