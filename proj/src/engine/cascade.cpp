#include "galinv/engine/cascade.hpp"

#include <algorithm>
#include <functional>

#include "galinv/exact/pauli.hpp"

namespace galinv {

namespace {

enum Block { UL, UR, LL, LR };

MatrixCR place(Block b, const MatrixCR& m) {
  MatrixCR out(4, 4);
  out.set_block(b == LL || b == LR ? 2 : 0, b == UR || b == LR ? 2 : 0, m);
  return out;
}

/// Block b of the d_t coefficient, times c I.
DiffOp b1(Block b, const ComplexRational& c = 1) {
  DiffOp op(4);
  op.set(MultiIndex::dt(), place(b, scale(c, identity_cr(2))));
  return op;
}

/// Block b of every d_j coefficient, times c sigma_j.
DiffOp b2(Block b, const ComplexRational& c = 1) {
  DiffOp op(4);
  for (int j = 1; j <= 3; ++j) op.set(MultiIndex::dx(j), place(b, scale(c, pauli(j))));
  return op;
}

/// Block b of the zeroth-order coefficient, times c I.
DiffOp b3(Block b, const ComplexRational& c = 1) {
  DiffOp op(4);
  op.set(MultiIndex{}, place(b, scale(c, identity_cr(2))));
  return op;
}

struct Shape {
  std::string text;
  std::vector<std::pair<std::string, DiffOp>> params;
  std::vector<std::string> printed;
};

const std::vector<std::string> kAll{"B1", "B2j", "B3"};

/// Keeps only the coefficients named in printed.
Vector project(const Ansatz& ansatz, const Vector& x, const std::vector<std::string>& printed) {
  auto keep = [&](const MultiIndex& mi) {
    const std::string name = mi.order() == 0 ? "B3" : mi.a == 1 ? "B1" : "B2j";
    return std::find(printed.begin(), printed.end(), name) != printed.end();
  };
  const std::size_t n2 = ansatz.ncomp() * ansatz.ncomp();
  Vector out = x;
  for (std::size_t s = 0; s < ansatz.slots().size(); ++s) {
    if (keep(ansatz.slots()[s])) continue;
    for (std::size_t k = 0; k < n2; ++k) out[s * n2 + k] = 0;
  }
  return out;
}

std::vector<Vector> project(const Ansatz& ansatz, const std::vector<Vector>& xs, const std::vector<std::string>& printed) {
  std::vector<Vector> out;
  for (const auto& x : xs) out.push_back(project(ansatz, x, printed));
  return out;
}

std::vector<Shape> shapes(const Rational& mass) {
  const ComplexRational two_im(Rational(0), 2 * mass);
  std::vector<Shape> s;
  s.push_back({"B1=[[p,q],[s,t]]I, B2j=[[e,f],[g,h]]sigma_j, B3=[[a,b],[c,d]]I",
               {{"p", b1(UL)}, {"q", b1(UR)}, {"s", b1(LL)}, {"t", b1(LR)},
                {"e", b2(UL)}, {"f", b2(UR)}, {"g", b2(LL)}, {"h", b2(LR)},
                {"a", b3(UL)}, {"b", b3(UR)}, {"c", b3(LL)}, {"d", b3(LR)}},
               kAll});
  s.push_back({"q=0, t=p",
               {{"p", b1(UL) + b1(LR)}, {"s", b1(LL)},
                {"e", b2(UL)}, {"f", b2(UR)}, {"g", b2(LL)}, {"h", b2(LR)},
                {"a", b3(UL)}, {"b", b3(UR)}, {"c", b3(LL)}, {"d", b3(LR)}},
               {"B1"}});
  s.push_back({"e=-h=s, f=0",
               {{"p", b1(UL) + b1(LR)}, {"s", b1(LL) + b2(UL) + b2(LR, -1)}, {"g", b2(LL)},
                {"a", b3(UL)}, {"b", b3(UR)}, {"c", b3(LL)}, {"d", b3(LR)}},
               {"B2j"}});
  s.push_back({"b=2ims, p=0, a=d, g=0",
               {{"s", b1(LL) + b2(UL) + b2(LR, -1) + b3(UR, two_im)}, {"a", b3(UL) + b3(LR)}, {"c", b3(LL)}},
               kAll});
  s.push_back({"a=0, c=0", {{"s", b1(LL) + b2(UL) + b2(LR, -1) + b3(UR, two_im)}}, kAll});
  return s;
}

}  // namespace

CascadeReport first_order_cascade(const Rational& mass, Exec exec) {
  const BoostRepresentation rep = calibrated_representation(4, mass, exec);
  const Ansatz ansatz(4, 1, false);
  const DerivedConstraints dc = derive_constraints(ansatz, generating_contexts(rep.generators, mass), exec);
  const std::size_t dim = ansatz.unknown_count();

  auto is_rotation = [](const RowKey& k) { return k.context < 3; };
  const std::vector<std::pair<std::string, std::function<bool(const RowKey&)>>> stages{
      {"rotations", is_rotation},
      {"boosts: d_t terms", [&](const RowKey& k) { return is_rotation(k) || k.term == MultiIndex::dt(); }},
      {"boosts: d_x terms",
       [&](const RowKey& k) { return is_rotation(k) || k.term == MultiIndex::dt() || k.term.space_order() == 1; }},
      {"boosts: zeroth-order terms", [&](const RowKey& k) { return is_rotation(k) || k.term.order() <= 1; }},
      {"rotations and boosts", [](const RowKey&) { return true; }},
  };

  const Nullspace full = nullspace(dc.system, exec);
  const std::vector<Vector> w = degenerate_subspace(ansatz, rep.generators, full.basis);
  const std::vector<Shape> expected = shapes(mass);

  CascadeReport report;
  report.degenerate_dimension = w.size();
  for (std::size_t k = 0; k < stages.size(); ++k) {
    const std::vector<SparseRow> rows = dc.select(stages[k].second);
    const Nullspace ns = nullspace(rows, dim, exec);
    std::vector<Vector> shape;
    CascadeStage st;
    st.name = stages[k].first;
    st.shape = expected[k].text;
    for (const auto& [name, op] : expected[k].params) {
      st.parameters.push_back(name);
      shape.push_back(ansatz.to_vector(op));
    }
    st.rows = rows.size();
    st.dimension = ns.dimension();
    st.shape_dimension = rank_of(shape);
    st.exact = same_span(ns.basis, shape);
    st.fits_modulo_degenerate = contained_modulo(ns.basis, shape, w);
    st.equal_modulo_degenerate = st.fits_modulo_degenerate && contained_modulo(shape, ns.basis, w);
    st.printed = expected[k].printed;
    const auto pn = project(ansatz, ns.basis, st.printed);
    const auto ps = project(ansatz, shape, st.printed);
    const auto pw = project(ansatz, w, st.printed);
    st.printed_exact = same_span(pn, ps);
    st.printed_equal_modulo_degenerate = contained_modulo(pn, ps, pw) && contained_modulo(ps, pn, pw);
    report.stages.push_back(std::move(st));
  }
  return report;
}

}  // namespace galinv
