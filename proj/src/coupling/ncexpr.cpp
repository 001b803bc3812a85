#include "galinv/coupling/ncexpr.hpp"

#include <algorithm>
#include <sstream>

#include "galinv/exact/pauli.hpp"

namespace galinv {

namespace {

std::string mu_name(int mu) { return mu == 0 ? "t" : std::to_string(mu); }

using Scalars = std::map<Word, ComplexRational>;

NCSymbol differentiate(const NCSymbol& d, const NCSymbol& f) {
  const int mu = d.kind == NCSymbol::Kind::Dt ? 0 : d.j;
  if (f.kind == NCSymbol::Kind::V) return {NCSymbol::Kind::DV, 0, mu};
  return {NCSymbol::Kind::DA, f.j, mu};
}

void expand(const Word& w, const ComplexRational& c, Scalars& out) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!w[i].is_derivative() || !w[i + 1].is_field()) continue;
    if (w[i + 1].is_field_derivative()) {
      throw SecondFieldDerivative("derivative acting on " + w[i + 1].name());
    }
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    expand(swapped, c, out);
    Word derived(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    derived.push_back(differentiate(w[i], w[i + 1]));
    derived.insert(derived.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
    expand(derived, c, out);
    return;
  }
  // Fields now precede derivatives; each block commutes internally.
  Word sorted = w;
  const auto split = std::find_if(sorted.begin(), sorted.end(), [](const NCSymbol& s) { return s.is_derivative(); });
  std::sort(sorted.begin(), split);
  std::sort(split, sorted.end());
  auto [it, fresh] = out.emplace(sorted, c);
  if (!fresh) it->second += c;
}

ComplexRational ratio(const MatrixCR& a, const MatrixCR& b) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!b(i, j).is_zero()) return a(i, j) / b(i, j);
    }
  }
  return ComplexRational(0);
}

std::string coefficient_latex(const MatrixCR& m) {
  auto wrap = [](const ComplexRational& c) {
    const std::string s = c.to_string();
    return c.is_real() || sgn(c.re()) == 0 ? s : "(" + s + ")";
  };
  std::vector<std::string> parts;
  if (m.rows() == 2) {
    const ComplexRational c0 = trace(m) / ComplexRational(2);
    if (!c0.is_zero()) parts.push_back(wrap(c0));
    for (int k = 1; k <= 3; ++k) {
      const ComplexRational ck = trace(pauli(k) * m) / ComplexRational(2);
      if (!ck.is_zero()) parts.push_back(wrap(ck) + "\\sigma_" + std::to_string(k));
    }
  } else if (m == scale(m(0, 0), identity_cr(m.rows()))) {
    parts.push_back(wrap(m(0, 0)));
  } else {
    parts.push_back(to_string(m));
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " + ") + p;
  return parts.size() > 1 ? "(" + out + ")" : out;
}

}  // namespace

std::string NCSymbol::name() const {
  switch (kind) {
    case Kind::Dt: return "dt";
    case Kind::Dx: return "d" + std::to_string(j);
    case Kind::V: return "V";
    case Kind::A: return "A" + std::to_string(j);
    case Kind::DV: return "d" + mu_name(mu) + "V";
    case Kind::DA: return "d" + mu_name(mu) + "A" + std::to_string(j);
  }
  return "?";
}

std::string NCSymbol::latex() const {
  switch (kind) {
    case Kind::Dt: return "\\partial_t";
    case Kind::Dx: return "\\partial_" + std::to_string(j);
    case Kind::V: return "V";
    case Kind::A: return "A_" + std::to_string(j);
    case Kind::DV: return "(\\partial_" + mu_name(mu) + " V)";
    case Kind::DA: return "(\\partial_" + mu_name(mu) + " A_" + std::to_string(j) + ")";
  }
  return "?";
}

NCExpr NCExpr::constant(const MatrixCR& m) {
  NCExpr e(m.rows());
  e.add({}, m);
  return e;
}

NCExpr NCExpr::scalar(const ComplexRational& c, std::size_t dim) { return constant(scale(c, identity_cr(dim))); }

NCExpr NCExpr::symbol(const NCSymbol& s, std::size_t dim) {
  NCExpr e(dim);
  e.add({s}, identity_cr(dim));
  return e;
}

MatrixCR NCExpr::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? MatrixCR(dim_, dim_) : it->second;
}

void NCExpr::add(const Word& w, const MatrixCR& m) {
  if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("coefficient size does not match the expression");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (!m.is_zero()) terms_.emplace(w, m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) terms_.erase(it);
}

NCExpr& NCExpr::operator+=(const NCExpr& o) {
  if (o.dim_ != dim_) throw DimensionError("expressions of different sizes");
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

NCExpr& NCExpr::operator-=(const NCExpr& o) {
  if (o.dim_ != dim_) throw DimensionError("expressions of different sizes");
  for (const auto& [w, m] : o.terms_) add(w, -m);
  return *this;
}

NCExpr operator*(const NCExpr& a, const NCExpr& b) {
  if (a.dim_ != b.dim_) throw DimensionError("expressions of different sizes");
  NCExpr out(a.dim_);
  for (const auto& [wa, ma] : a.terms_) {
    for (const auto& [wb, mb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ma * mb);
    }
  }
  return out;
}

NCExpr scale(const ComplexRational& c, const NCExpr& e) {
  NCExpr out(e.dim());
  for (const auto& [w, m] : e.terms()) out.add(w, scale(c, m));
  return out;
}

NCExpr left_multiply(const MatrixCR& m, const NCExpr& e) {
  NCExpr out(e.dim());
  for (const auto& [w, c] : e.terms()) out.add(w, m * c);
  return out;
}

NCExpr nc_normal_form(const NCExpr& e) {
  NCExpr out(e.dim());
  for (const auto& [w, m] : e.terms()) {
    Scalars parts;
    expand(w, ComplexRational(1), parts);
    for (const auto& [pw, c] : parts) out.add(pw, scale(c, m));
  }
  return out;
}

NCExpr pauli_dot(const std::array<NCExpr, 3>& a) {
  NCExpr out(2);
  for (int j = 0; j < 3; ++j) out += left_multiply(pauli(j + 1), a[static_cast<std::size_t>(j)]);
  return out;
}

std::array<NCExpr, 3> cross(const std::array<NCExpr, 3>& a, const std::array<NCExpr, 3>& b) {
  std::array<NCExpr, 3> out{NCExpr(a[0].dim()), NCExpr(a[0].dim()), NCExpr(a[0].dim())};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    out[i] = a[j] * b[k] - a[k] * b[j];
  }
  return out;
}

NCExpr dot(const std::array<NCExpr, 3>& a, const std::array<NCExpr, 3>& b) {
  NCExpr out(a[0].dim());
  for (std::size_t j = 0; j < 3; ++j) out += a[j] * b[j];
  return out;
}

NCExpr drop_fields(const NCExpr& e) {
  NCExpr out(e.dim());
  for (const auto& [w, m] : e.terms()) {
    if (std::none_of(w.begin(), w.end(), [](const NCSymbol& s) { return s.is_field(); })) out.add(w, m);
  }
  return out;
}

NCExpr drop_vector_potential_derivatives(const NCExpr& e) {
  NCExpr out(e.dim());
  for (const auto& [w, m] : e.terms()) {
    if (std::none_of(w.begin(), w.end(), [](const NCSymbol& s) { return s.kind == NCSymbol::Kind::DA; })) {
      out.add(w, m);
    }
  }
  return out;
}

bool projectively_equal(const NCExpr& a, const NCExpr& b) {
  if (a.dim() != b.dim() || a.terms().size() != b.terms().size()) return false;
  if (a.is_zero()) return true;
  const auto& [w0, m0] = *b.terms().begin();
  const ComplexRational c = ratio(a.coefficient(w0), m0);
  return !c.is_zero() && a == scale(c, b);
}

std::string to_latex(const NCExpr& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : e.terms()) {
    std::string c = coefficient_latex(m);
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (!w.empty() && c == "1") c.clear();
    if (!w.empty() && c.rfind("1\\", 0) == 0) c.erase(0, 1);
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + ")) << c;
    bool space = !c.empty();
    for (const auto& s : w) {
      os << (space ? " " : "") << s.latex();
      space = true;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const NCExpr& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : e.terms()) {
    os << (first ? "" : " + ") << to_string(m);
    for (const auto& s : w) os << '*' << s.name();
    first = false;
  }
  return os.str();
}

}  // namespace galinv
