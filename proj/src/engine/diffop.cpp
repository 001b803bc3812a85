#include "galinv/engine/diffop.hpp"

#include <sstream>
#include <stdexcept>

namespace galinv {

MultiIndex MultiIndex::dx(int j, int n) {
  if (j < 1 || j > 3) throw std::out_of_range("space index must be 1..3");
  MultiIndex mi;
  mi.b[static_cast<std::size_t>(j - 1)] = n;
  return mi;
}

std::string MultiIndex::label() const {
  return "t" + std::to_string(a) + "x" + std::to_string(b[0]) + std::to_string(b[1]) + std::to_string(b[2]);
}

bool operator<(const MultiIndex& x, const MultiIndex& y) {
  if (x.order() != y.order()) return x.order() > y.order();
  if (x.a != y.a) return x.a > y.a;
  return x.b > y.b;
}

std::vector<MultiIndex> multi_indices_of_order(int n) {
  std::vector<MultiIndex> out;
  for (int a = n; a >= 0; --a) {
    const int s = n - a;
    for (int b1 = s; b1 >= 0; --b1) {
      for (int b2 = s - b1; b2 >= 0; --b2) out.push_back({a, {b1, b2, s - b1 - b2}});
    }
  }
  return out;
}

DiffOp scale(const ComplexRational& s, const DiffOp& op) {
  DiffOp out(op.ncomp());
  for (const auto& [mi, m] : op.terms()) out.add(mi, scale(s, m));
  return out;
}

DiffOp left_multiply(const MatrixCR& m, const DiffOp& op) {
  DiffOp out(op.ncomp());
  for (const auto& [mi, c] : op.terms()) out.add(mi, m * c);
  return out;
}

DiffOpVP to_vpoly(const DiffOp& op) {
  return op.map([](const ComplexRational& z) { return VPoly(z); });
}

DiffOp to_constant(const DiffOpVP& op) {
  return op.map([](const VPoly& p) {
    if (!p.is_constant()) throw std::domain_error("operator coefficient still depends on v: " + p.to_string());
    return p.constant();
  });
}

DiffOp evaluate(const DiffOpVP& op, const std::array<ComplexRational, 3>& v) {
  return op.map([&](const VPoly& p) { return p.evaluate(v); });
}

std::vector<MultiIndex> mixed_term_report(const DiffOp& op) {
  std::vector<MultiIndex> out;
  for (const auto& [mi, m] : op.terms()) {
    if (mi.is_mixed()) out.push_back(mi);
  }
  return out;
}

bool projectively_equal(const DiffOp& op, const DiffOp& other) {
  if (op.ncomp() != other.ncomp() || op.is_zero() || other.is_zero()) return false;
  const auto& [mi, m] = *op.terms().begin();
  const MatrixCR o = other.coefficient(mi);
  for (std::size_t k = 0; k < m.data().size(); ++k) {
    if (m.data()[k].is_zero()) continue;
    if (o.data()[k].is_zero()) return false;
    return scale(o.data()[k] / m.data()[k], op) == other;
  }
  return false;
}

std::string to_string(const DiffOp& op) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [mi, m] : op.terms()) {
    os << (first ? "" : " + ") << to_string(m) << "*" << mi.label();
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace galinv
