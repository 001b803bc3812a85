#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "galinv/exact/vpoly.hpp"

namespace galinv {

/// Index of an unknown inside a ConstraintSystem / ansatz.
using UnknownId = int;

/// Linear combination of unknowns with VPoly coefficients, plus a VPoly constant.
class LinForm {
 public:
  using Coeffs = std::map<UnknownId, VPoly>;

  LinForm() = default;
  LinForm(const VPoly& constant) : constant_(constant) {}  // NOLINT
  LinForm(const ComplexRational& c) : constant_(c) {}      // NOLINT
  LinForm(int c) : constant_(c) {}                         // NOLINT

  static LinForm unknown(UnknownId id, const VPoly& coeff = VPoly(1));

  const Coeffs& coeffs() const { return coeffs_; }
  const VPoly& constant() const { return constant_; }
  bool is_zero() const { return coeffs_.empty() && constant_.is_zero(); }
  VPoly coefficient(UnknownId id) const;

  void add(UnknownId id, const VPoly& c);

  LinForm& operator+=(const LinForm& o);
  LinForm& operator-=(const LinForm& o);
  LinForm& operator*=(const VPoly& s);

  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator-(const LinForm& a) { return LinForm() - a; }
  friend LinForm operator*(LinForm a, const VPoly& s) { return a *= s; }
  friend LinForm operator*(const VPoly& s, LinForm a) { return a *= s; }
  friend LinForm operator*(LinForm a, const ComplexRational& s) { return a *= VPoly(s); }
  friend LinForm operator*(const ComplexRational& s, LinForm a) { return a *= VPoly(s); }

  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.coeffs_ == b.coeffs_ && a.constant_ == b.constant_;
  }

  /// Replaces every unknown by its value; values[id] must exist for each id used.
  VPoly substitute(std::span<const ComplexRational> values) const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  Coeffs coeffs_;
  VPoly constant_;
};

/// One v-monomial slice of a LinForm: scalar coefficients per unknown.
struct LinearRow {
  std::map<UnknownId, ComplexRational> coeffs;
  ComplexRational constant;

  friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

/// Splits a LinForm by v-monomial. Monomials whose slice is identically zero are absent.
std::map<Monomial, LinearRow> collect_v(const LinForm& entry);

/// Inverse of collect_v.
LinForm reassemble(const std::map<Monomial, LinearRow>& collected);

}  // namespace galinv
