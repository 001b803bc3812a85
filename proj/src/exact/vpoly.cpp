#include "galinv/exact/vpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace galinv {

VPoly::VPoly(const ComplexRational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0, 0}, c);
}

VPoly VPoly::var(int k) {
  if (k < 0 || k > 2) throw std::out_of_range("VPoly::var index must be 0..2");
  Monomial m{0, 0, 0};
  m[static_cast<std::size_t>(k)] = 1;
  return monomial(m, ComplexRational(1));
}

VPoly VPoly::monomial(const Monomial& m, const ComplexRational& c) {
  VPoly p;
  p.add_term(m, c);
  return p;
}

bool VPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0});
}

ComplexRational VPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ComplexRational() : it->second;
}

int VPoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

void VPoly::add_term(const Monomial& m, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VPoly& VPoly::operator+=(const VPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
  VPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    }
  }
  return out;
}

VPoly& VPoly::operator*=(const VPoly& o) { return *this = *this * o; }

VPoly& VPoly::operator*=(const ComplexRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

ComplexRational VPoly::evaluate(const std::array<ComplexRational, 3>& v) const {
  ComplexRational acc;
  for (const auto& [m, c] : terms_) {
    ComplexRational t = c;
    for (std::size_t k = 0; k < 3; ++k) {
      for (int e = 0; e < m[k]; ++e) t *= v[k];
    }
    acc += t;
  }
  return acc;
}

std::string VPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coeff = c.to_string();
    const bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) coeff = "(" + coeff + ")";
    if (!first) os << (coeff[0] == '-' ? " - " : " + ");
    if (!first && coeff[0] == '-') coeff.erase(0, 1);
    const bool unit = m != Monomial{0, 0, 0} && (coeff == "1" || coeff == "-1");
    bool need_star = !unit;
    if (unit) {
      if (coeff == "-1") os << '-';
    } else {
      os << coeff;
    }
    for (std::size_t k = 0; k < 3; ++k) {
      if (m[k] == 0) continue;
      if (need_star) os << '*';
      os << "v" << k + 1;
      if (m[k] > 1) os << "^" << m[k];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

VPoly pow(const VPoly& p, int n) {
  if (n < 0) throw std::invalid_argument("negative VPoly power");
  VPoly acc(1);
  for (int i = 0; i < n; ++i) acc = acc * p;
  return acc;
}

}  // namespace galinv
