#include "galinv/cli/suite.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "galinv/calculus/plane_wave.hpp"
#include "galinv/calculus/power.hpp"
#include "galinv/coupling/coupling.hpp"
#include "galinv/engine/cascade.hpp"
#include "galinv/engine/family.hpp"
#include "galinv/engine/oracle.hpp"
#include "galinv/exact/pauli.hpp"

namespace galinv {

namespace {

using Clock = std::chrono::steady_clock;

class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}

  Rational rational(int max_num = 9, int max_den = 6) {
    Rational q(std::uniform_int_distribution<int>(-max_num, max_num)(rng_),
               std::uniform_int_distribution<int>(1, max_den)(rng_));
    q.canonicalize();
    return q;
  }

  ComplexRational complex() {
    Rational re = rational();
    return {re, rational()};
  }

  std::array<Rational, 3> nonzero_vector(int max_num, int max_den) {
    for (;;) {
      std::array<Rational, 3> v{rational(max_num, max_den), rational(max_num, max_den), rational(max_num, max_den)};
      if (vec3_dot(v, v) != 0) return v;
    }
  }

  GalileiElement element() {
    Quaternion q;
    do {
      q = {rational(3, 2), rational(3, 2), rational(3, 2), rational(3, 2)};
    } while (q.norm2() == 0);
    GalileiElement g;
    g.R = rotation_from_quaternion(q);
    g.v = {rational(3, 2), rational(3, 2), rational(3, 2)};
    g.a = {rational(), rational(), rational()};
    g.b = rational();
    return g;
  }

 private:
  std::mt19937 rng_;
};

std::string str(std::size_t n) { return std::to_string(n); }

std::vector<Vector> vectors(const Ansatz& ansatz, const std::vector<DiffOp>& ops) {
  std::vector<Vector> out;
  for (const auto& op : ops) out.push_back(ansatz.to_vector(op));
  return out;
}

class Timer {
 public:
  explicit Timer(CriterionResult& r) : r_(r), start_(Clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  CriterionResult& r_;
  Clock::time_point start_;
};

std::string format_seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << s;
  return os.str();
}

}  // namespace

bool CriterionResult::pass() const {
  if (!within_limit()) return false;
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

CriterionResult criterion_boost_nonexistence(const SuiteOptions& o) {
  CriterionResult r{1, "two-component spinors admit no boost generators and no invariant equation", {}, 0, kPropOneSeconds};
  Timer timer(r);
  const BoostSolution sol = solve_boost_generators(standard_rotation_generators(2));
  r.checks.push_back({"boost generators for sigma/2 rotations: only the zero triple",
                      sol.only_zero.has_value() && *sol.only_zero,
                      "linear basis " + str(sol.basis.size()) + ", commuting " + str(sol.commuting.size())});
  FamilyOptions opt;
  opt.ncomp = 2;
  opt.order = 1;
  opt.exec = o.exec;
  const FamilyReport rep = invariant_family(opt);
  r.checks.push_back({"first-order two-component family is empty", rep.dimension() == 0,
                      "family dimension " + str(rep.dimension()) + ", raw " + str(rep.raw_basis.size())});
  return r;
}

CriterionResult criterion_first_order_family(const SuiteOptions& o) {
  CriterionResult r{2, "four-component first-order family is the Levy-Leblond operator", {}, 0, kPropTwoSeconds};
  Timer timer(r);
  FamilyOptions opt;
  opt.exec = o.exec;
  const FamilyReport rep = invariant_family(opt);
  r.checks.push_back({"boost scale calibrated and verified", rep.calibration.verified && rep.calibration.constant_block_matches,
                      "lambda " + rep.calibration.lambda.to_string()});
  r.checks.push_back({"family dimension is 1", rep.dimension() == 1,
                      "family " + str(rep.dimension()) + ", raw " + str(rep.raw_basis.size()) + ", degenerate " +
                          str(rep.degenerate_basis.size()) + ", unknowns " + str(rep.unknowns) + ", rank " +
                          str(rep.rank)});
  const bool exact = rep.dimension() == 1 && rep.family[0] == levy_leblond_operator(opt.mass);
  r.checks.push_back({"basis element equals B1 lower-left I, B2j diag(sigma_j, -sigma_j), B3 upper-right 2imI", exact,
                      rep.dimension() == 1 ? to_string(rep.family[0]) : std::string("no single element")});
  const CascadeReport cascade = first_order_cascade(opt.mass, o.exec);
  for (const auto& st : cascade.stages) {
    std::string printed;
    for (const auto& p : st.printed) printed += (printed.empty() ? "" : ",") + p;
    r.checks.push_back({"cascade stage '" + st.name + "' matches shape " + st.shape + " on " + printed,
                        st.printed_equal_modulo_degenerate,
                        "dim " + str(st.dimension) + " vs shape " + str(st.shape_dimension) +
                            ", printed exact " + (st.printed_exact ? "yes" : "no") + ", full exact " +
                            (st.exact ? "yes" : "no") + ", full modulo degenerate " +
                            (st.equal_modulo_degenerate ? "yes" : "no")});
  }
  return r;
}

CriterionResult criterion_square(const SuiteOptions&) {
  CriterionResult r{3, "L^2 is the Schrodinger operator times the identity", {}, 0, 0};
  Timer timer(r);
  const Rational m(1);
  const DiffOp L2 = op_power(levy_leblond_operator(m), 2);
  r.checks.push_back({"L^2 equals 2im d_t + laplacian (projective)", projectively_equal(L2, schrodinger_operator(4, m)),
                      to_string(L2)});
  r.checks.push_back({"L^2 equals 2im d_t + laplacian with factor 1", L2 == schrodinger_operator(4, m), ""});
  r.checks.push_back({"off-diagonal blocks vanish and diagonal blocks agree", block_diagonal_equal(L2), ""});
  return r;
}

CriterionResult criterion_power_invariance(const SuiteOptions&) {
  CriterionResult r{4, "L^N is invariant for N = 1..5 under a fully symbolic boost", {}, 0, 0};
  Timer timer(r);
  const Rational m(1);
  const GeneratorSet gens = calibrated_representation(4, m).generators;
  const auto sweep = power_sweep(levy_leblond_operator(m), 5, symbolic_boost_context(gens, m));
  for (const auto& p : sweep) {
    r.checks.push_back({"L^" + std::to_string(p.N) + " invariant", p.invariant,
                        "residual terms " + str(p.residual_terms) + ", order " + std::to_string(p.order)});
  }
  return r;
}

CriterionResult criterion_fundamental(const SuiteOptions& o) {
  CriterionResult r{5, "mixed derivatives from N = 3 on; mixed-free second order family is span{L, L^2}", {}, 0, 0};
  Timer timer(r);
  const Rational m(1);
  const DiffOp L = levy_leblond_operator(m);
  for (int n = 3; n <= 5; ++n) {
    const auto mixed = mixed_term_report(op_power(L, n));
    r.checks.push_back({"L^" + std::to_string(n) + " has mixed time-space terms", !mixed.empty(),
                        str(mixed.size()) + " mixed terms"});
  }
  FamilyOptions opt;
  opt.order = 2;
  opt.forbid_mixed = true;
  opt.exec = o.exec;
  const FamilyReport rep = invariant_family(opt);
  const std::vector<DiffOp> expected{L, schrodinger_operator(4, m)};
  r.checks.push_back({"second-order mixed-free family equals span{L, Schrodinger}",
                      rep.dimension() == 2 &&
                          same_span(vectors(rep.ansatz, rep.family), vectors(rep.ansatz, expected)),
                      "family dimension " + str(rep.dimension()) + ", raw " + str(rep.raw_basis.size())});
  OracleOptions oo;
  oo.elements = kOracleElements;
  oo.seed = o.seed;
  const OracleResult oracle = sampled_invariant_space(rep.ansatz, rep.generators, m, oo);
  const std::vector<Vector> raw = vectors(rep.ansatz, rep.raw_basis);
  r.checks.push_back({"sampling oracle on " + std::to_string(oracle.elements) + " random elements reproduces the solution space",
                      oracle.elements >= kOracleElements && same_span(oracle.basis, raw),
                      "oracle dimension " + str(oracle.basis.size()) + " from " + str(oracle.rows) + " rows"});
  return r;
}

CriterionResult criterion_pauli_schrodinger(const SuiteOptions&) {
  CriterionResult r{6, "eliminating chi from the coupled pair gives the Pauli-Schrodinger equation", {}, 0, 0};
  Timer timer(r);
  const CouplingDerivation d = derive_pauli_schrodinger(Rational(1));
  r.checks.push_back({"normal form equals (i d_t - V) - (1/2m)[pi.pi + i sigma.(pi x pi)] term by term",
                      d.matches_reference, str(d.result.terms().size()) + " terms"});
  r.checks.push_back({"spin term present", !d.spin_term.is_zero(), to_string(d.spin_term)});
  r.checks.push_back({"V = A = 0 gives i d_t + (1/2m) laplacian", d.free_limit, ""});
  r.checks.push_back({"field-free result is the upper block of L^2 (projective)", d.matches_square, ""});
  return r;
}

CriterionResult criterion_properties(const SuiteOptions& o) {
  CriterionResult r{7, "property suites", {}, 0, kPropertySuiteSeconds};
  Timer timer(r);
  Sampler rnd(o.seed);

  bool group_ok = true;
  for (int t = 0; t < 40; ++t) {
    const GalileiElement a = rnd.element(), b = rnd.element(), c = rnd.element();
    const GalileiElement id = GalileiElement::identity();
    group_ok = group_ok && compose(a, compose(b, c)) == compose(compose(a, b), c) && compose(a, id) == a &&
               compose(id, a) == a && compose(inverse(a), a) == id && compose(a, inverse(a)) == id &&
               is_valid(compose(a, b));
  }
  r.checks.push_back({"group axioms on 40 random triples", group_ok, ""});

  bool pauli_ok = true;
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      MatrixCR rhs = j == k ? identity_cr(2) : MatrixCR(2, 2);
      for (int l = 1; l <= 3; ++l) rhs += scale(ComplexRational(Rational(0), levi_civita(j, k, l)), pauli(l));
      pauli_ok = pauli_ok && pauli(j) * pauli(k) == rhs &&
                 anticommutator(pauli(j), pauli(k)) == scale(ComplexRational(j == k ? 2 : 0), identity_cr(2));
    }
  }
  r.checks.push_back({"sigma_j sigma_k = delta_jk + i eps_jkl sigma_l", pauli_ok, ""});

  bool sound = true;
  std::size_t vectors_checked = 0;
  for (auto [order, forbid] : {std::pair{1, false}, std::pair{2, true}}) {
    const GeneratorSet gens = calibrated_representation(4, 1, o.exec).generators;
    const Ansatz ansatz(4, order, forbid);
    const DerivedConstraints dc = derive_constraints(ansatz, generating_contexts(gens, 1), o.exec);
    for (const auto& v : nullspace(dc.system, o.exec).basis) {
      sound = sound && satisfies(dc.system, v);
      ++vectors_checked;
    }
  }
  r.checks.push_back({"every nullspace vector satisfies every row", sound, str(vectors_checked) + " vectors"});

  bool generators_ok = true;
  for (auto [n, order] : {std::pair{std::size_t{4}, 1}, std::pair{std::size_t{2}, 2}}) {
    const GeneratorSet gens = calibrated_representation(n, 1, o.exec).generators;
    const Ansatz ansatz(n, order, false);
    std::vector<TransformContext> gen_ctx, fin_ctx;
    for (int k = 1; k <= 3; ++k) gen_ctx.push_back(rotation_generator_context(gens, k, 1));
    for (const Quaternion& q : {Quaternion{2, 0, 0, 1}, Quaternion{2, 1, 0, 0}, Quaternion{2, 0, 1, 0}}) {
      fin_ctx.push_back(finite_rotation_context(gens, q, 1));
    }
    generators_ok = generators_ok && same_span(nullspace(derive_constraints(ansatz, gen_ctx, o.exec).system, o.exec).basis,
                                               nullspace(derive_constraints(ansatz, fin_ctx, o.exec).system, o.exec).basis);
  }
  r.checks.push_back({"rotation generators and finite rotations give the same nullspace", generators_ok, ""});

  const Rational m(3, 2);
  const DiffOp L = levy_leblond_operator(m);
  bool dispersion_ok = true;
  for (int t = 0; t < kDispersionSamples; ++t) {
    const auto k = rnd.nonzero_vector(4, 3);
    const Rational w = free_frequency(k, m);
    Rational shift = rnd.rational();
    if (shift == 0) shift = 1;
    for (const auto& row : dispersion_scan(L, m, {k}, {w, w + shift})) {
      dispersion_ok = dispersion_ok && ((row.nullity != 0) == row.on_shell);
    }
  }
  r.checks.push_back({"nonzero plane-wave nullity iff omega = |k|^2/2m", dispersion_ok,
                      std::to_string(kDispersionSamples) + " random k"});

  const GeneratorSet gens = calibrated_representation(4, m, o.exec).generators;
  bool covariance_ok = true;
  for (int t = 0; t < 6; ++t) {
    PlaneWave pw;
    pw.mass = m;
    pw.k = rnd.nonzero_vector(4, 3);
    pw.omega = free_frequency(pw.k, m);
    pw.spinor = Vector(4);
    for (const auto& u : plane_wave_reduce(L, pw).solutions) {
      const ComplexRational c = rnd.complex();
      for (std::size_t i = 0; i < 4; ++i) pw.spinor[i] += c * u[i];
    }
    const GalileiElement g = rnd.element();
    const CovarianceReport there = covariance_check(L, pw, g, gens);
    const CovarianceReport back = covariance_check(L, there.image, inverse(g), gens);
    covariance_ok = covariance_ok && there.input_solves && there.image_solves && there.image_on_shell &&
                    (vec3_dot(g.v, g.v) == 0 || there.derived_sign == kBoostPhaseSign) && back.image_solves &&
                    back.image.k == pw.k && back.image.omega == pw.omega &&
                    rank_of({back.image.spinor, pw.spinor}) == 1;
  }
  r.checks.push_back({"plane-wave solutions map to solutions and return under the inverse", covariance_ok,
                      "boost phase sign " + std::to_string(kBoostPhaseSign)});
  return r;
}

std::vector<CriterionResult> run_acceptance(const SuiteOptions& o) {
  return {criterion_boost_nonexistence(o), criterion_first_order_family(o), criterion_square(o),
          criterion_power_invariance(o),   criterion_fundamental(o),        criterion_pauli_schrodinger(o),
          criterion_properties(o)};
}

std::string summary_line(const CriterionResult& r) {
  std::string line = std::string(r.pass() ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.title + " (" +
                     format_seconds(r.seconds) + " s";
  if (r.limit > 0) line += ", limit " + format_seconds(r.limit) + " s";
  return line + ")";
}

}  // namespace galinv
