#include "galinv/exact/linform.hpp"

#include <sstream>
#include <stdexcept>

namespace galinv {

LinForm LinForm::unknown(UnknownId id, const VPoly& coeff) {
  LinForm f;
  f.add(id, coeff);
  return f;
}

VPoly LinForm::coefficient(UnknownId id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? VPoly() : it->second;
}

void LinForm::add(UnknownId id, const VPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(id, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LinForm& LinForm::operator+=(const LinForm& o) {
  for (const auto& [id, c] : o.coeffs_) add(id, c);
  constant_ += o.constant_;
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) {
  for (const auto& [id, c] : o.coeffs_) add(id, -c);
  constant_ -= o.constant_;
  return *this;
}

LinForm& LinForm::operator*=(const VPoly& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    constant_ = VPoly();
    return *this;
  }
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it->second = it->second * s;
    it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
  }
  constant_ = constant_ * s;
  return *this;
}

VPoly LinForm::substitute(std::span<const ComplexRational> values) const {
  VPoly out = constant_;
  for (const auto& [id, c] : coeffs_) {
    if (id < 0 || static_cast<std::size_t>(id) >= values.size()) {
      throw std::out_of_range("LinForm::substitute: no value for unknown " + std::to_string(id));
    }
    out += c * values[static_cast<std::size_t>(id)];
  }
  return out;
}

std::string LinForm::to_string(std::span<const std::string> names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, c] : coeffs_) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")*";
    if (static_cast<std::size_t>(id) < names.size()) {
      os << names[static_cast<std::size_t>(id)];
    } else {
      os << "u" << id;
    }
    first = false;
  }
  if (!constant_.is_zero()) {
    if (!first) os << " + ";
    os << "(" << constant_.to_string() << ")";
  }
  return os.str();
}

std::map<Monomial, LinearRow> collect_v(const LinForm& entry) {
  std::map<Monomial, LinearRow> out;
  for (const auto& [id, poly] : entry.coeffs()) {
    for (const auto& [m, c] : poly.terms()) out[m].coeffs.emplace(id, c);
  }
  for (const auto& [m, c] : entry.constant().terms()) out[m].constant = c;
  return out;
}

LinForm reassemble(const std::map<Monomial, LinearRow>& collected) {
  LinForm f;
  for (const auto& [m, row] : collected) {
    for (const auto& [id, c] : row.coeffs) f.add(id, VPoly::monomial(m, c));
    f += LinForm(VPoly::monomial(m, row.constant));
  }
  return f;
}

}  // namespace galinv
