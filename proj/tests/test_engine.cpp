#include <gtest/gtest.h>

#include "galinv/calculus/power.hpp"
#include "galinv/engine/cascade.hpp"
#include "galinv/engine/family.hpp"
#include "galinv/engine/oracle.hpp"
#include "galinv/exact/pauli.hpp"
#include "support.hpp"

namespace galinv {
namespace {

using testing::RandomExact;

MatrixCR block(int r, int c, const MatrixCR& m) {
  MatrixCR out(4, 4);
  out.set_block(static_cast<std::size_t>(r) * 2, static_cast<std::size_t>(c) * 2, m);
  return out;
}

/// Four-component first-order operator: d_t in the lower-left block,
/// diag(sigma_j, -sigma_j) d_j, 2 i m in the upper-right block.
DiffOp four_component_operator(const Rational& m) {
  DiffOp op(4);
  op.set(MultiIndex::dt(), block(1, 0, identity_cr(2)));
  for (int j = 1; j <= 3; ++j) op.set(MultiIndex::dx(j), from_blocks(pauli(j), MatrixCR(2, 2), MatrixCR(2, 2), -pauli(j)));
  op.set(MultiIndex{}, block(0, 1, scale(ComplexRational(Rational(0), 2 * m), identity_cr(2))));
  return op;
}

DiffOp schrodinger(std::size_t n, const Rational& m) {
  DiffOp op(n);
  for (int j = 1; j <= 3; ++j) op.set(MultiIndex::dx(j, 2), identity_cr(n));
  op.set(MultiIndex::dt(), scale(ComplexRational(Rational(0), 2 * m), identity_cr(n)));
  return op;
}

DiffOp multiply_ops(const DiffOp& x, const DiffOp& y) {
  DiffOp out(x.ncomp());
  for (const auto& [a, A] : x.terms()) {
    for (const auto& [b, B] : y.terms()) out.add(a + b, A * B);
  }
  return out;
}

std::vector<Vector> vectors_of(const Ansatz& ansatz, const std::vector<DiffOp>& ops) {
  std::vector<Vector> out;
  for (const auto& op : ops) out.push_back(ansatz.to_vector(op));
  return out;
}

GalileiElement random_element(RandomExact& rnd) {
  Quaternion q;
  do {
    q = {rnd.rational(3, 2), rnd.rational(3, 2), rnd.rational(3, 2), rnd.rational(3, 2)};
  } while (q.norm2() == 0);
  GalileiElement g;
  g.R = rotation_from_quaternion(q);
  g.v = {rnd.rational(3, 2), rnd.rational(3, 2), rnd.rational(3, 2)};
  g.a = {rnd.rational(), rnd.rational(), rnd.rational()};
  g.b = rnd.rational();
  return g;
}

std::vector<Vector> oracle_nullspace(const Ansatz& ansatz, const GeneratorSet& gens, const Rational& m,
                                     unsigned seed) {
  OracleOptions opt;
  opt.seed = seed;
  const OracleResult r = sampled_invariant_space(ansatz, gens, m, opt);
  EXPECT_EQ(r.elements, 20);
  return r.basis;
}

TEST(Transform, IdentityContextFixesEveryOperator) {
  RandomExact rnd(11);
  const TransformContext id = identity_context(2, Rational(1));
  DiffOp op(2);
  op.set(MultiIndex::dt(), rnd.matrix(2, 2));
  op.set(MultiIndex::dx(2, 2), rnd.matrix(2, 2));
  op.set(MultiIndex{}, rnd.matrix(2, 2));
  EXPECT_EQ(to_constant(transform_operator(op, id)), op);
  EXPECT_TRUE(verify_invariance(op, id));
}

TEST(Transform, ScalarSchrodingerIsInvariant) {
  const Rational m(3, 2);
  const GeneratorSet gens = calibrated_representation(1, m).generators;
  const DiffOp op = schrodinger(1, m);
  EXPECT_TRUE(verify_invariance(op, symbolic_boost_context(gens, m)));
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(verify_invariance(op, rotation_generator_context(gens, k, m)));
  // Wrong mass in the time term breaks boost invariance only.
  const DiffOp wrong = schrodinger(1, Rational(1));
  EXPECT_FALSE(verify_invariance(wrong, symbolic_boost_context(gens, m)));
  EXPECT_TRUE(verify_invariance(wrong, rotation_generator_context(gens, 3, m)));
}

TEST(Transform, BoostShiftsTimeDerivative) {
  const Rational m(2);
  const GeneratorSet gens = calibrated_representation(1, m).generators;
  DiffOp dt(1);
  dt.set(MultiIndex::dt(), identity_cr(1));
  const DiffOp image = evaluate(transform_operator(dt, boost_context(gens, {VPoly(1), VPoly(0), VPoly(0)}, m)),
                                {ComplexRational(0), ComplexRational(0), ComplexRational(0)});
  DiffOp expected(1);
  expected.set(MultiIndex::dt(), identity_cr(1));
  expected.set(MultiIndex::dx(1), identity_cr(1));
  expected.set(MultiIndex{}, scale(ComplexRational(Rational(0), -1), identity_cr(1)));
  EXPECT_EQ(image, expected);
}

TEST(Transform, SizeMismatchThrows) {
  const TransformContext id = identity_context(2, Rational(1));
  EXPECT_THROW(transform_operator(DiffOp(4), id), DimensionError);
}

TEST(Ansatz, RoundTripAndSlots) {
  const Ansatz full(4, 2, false);
  const Ansatz plain(4, 2, true);
  EXPECT_EQ(full.slots().size(), 15u);
  EXPECT_EQ(plain.slots().size(), 12u);
  EXPECT_EQ(plain.slot_of(MultiIndex::dt() + MultiIndex::dx(1)), -1);
  EXPECT_EQ(full.unknown_count(), 15u * 16u);
  EXPECT_EQ(full.names()[full.id(0, 1, 2)].substr(0, 1), "B");

  const DiffOp op = four_component_operator(Rational(1));
  EXPECT_EQ(full.to_operator(full.to_vector(op)), op);
  DiffOp mixed(4);
  mixed.set(MultiIndex::dt() + MultiIndex::dx(1), identity_cr(4));
  EXPECT_THROW(plain.to_vector(mixed), DimensionError);
  EXPECT_EQ(mixed_term_report(mixed).size(), 1u);
  EXPECT_TRUE(mixed_term_report(op).empty());
}

TEST(Constraints, SerialAndParallelAgree) {
  for (std::size_t n : {2u, 4u}) {
    const GeneratorSet gens = calibrated_representation(n, Rational(1)).generators;
    const Ansatz ansatz(n, 2, false);
    const auto ctxs = generating_contexts(gens, Rational(1));
    const DerivedConstraints s = derive_constraints(ansatz, ctxs, Exec::Serial);
    const DerivedConstraints p = derive_constraints(ansatz, ctxs, Exec::Parallel);
    EXPECT_EQ(s.keys, p.keys);
    EXPECT_EQ(s.system.rows, p.system.rows);
    EXPECT_EQ(s.system.unknowns, p.system.unknowns);
  }
}

TEST(Constraints, GeneratorsMatchFiniteRotations) {
  const Rational m(1);
  const GeneratorSet gens = calibrated_representation(4, m).generators;
  const Ansatz ansatz(4, 1, false);
  std::vector<TransformContext> gen_ctx, fin_ctx;
  for (int k = 1; k <= 3; ++k) gen_ctx.push_back(rotation_generator_context(gens, k, m));
  for (const Quaternion& q : {Quaternion{2, 0, 0, 1}, Quaternion{2, 1, 0, 0}, Quaternion{2, 0, 1, 0}}) {
    fin_ctx.push_back(finite_rotation_context(gens, q, m));
  }
  const auto a = nullspace(derive_constraints(ansatz, gen_ctx).system).basis;
  const auto b = nullspace(derive_constraints(ansatz, fin_ctx).system).basis;
  EXPECT_EQ(a.size(), 12u);
  EXPECT_TRUE(same_span(a, b));
}

TEST(Family, RawSolutionsSurviveConcreteElements) {
  const Rational m(1);
  RandomExact rnd(5);
  for (std::size_t n : {1u, 2u, 4u}) {
    FamilyOptions opt;
    opt.ncomp = n;
    opt.order = n == 1 ? 2 : 1;
    opt.mass = m;
    const FamilyReport rep = invariant_family(opt);
    for (int t = 0; t < 4; ++t) {
      const TransformContext ctx = element_context(rep.generators, random_element(rnd), m);
      for (const auto& op : rep.raw_basis) EXPECT_TRUE(verify_invariance(op, ctx)) << to_string(op);
    }
  }
}

TEST(Family, SolutionSetIsScaleInvariant) {
  FamilyOptions opt;
  const FamilyReport rep = invariant_family(opt);
  RandomExact rnd(17);
  const GeneratorSet& gens = rep.generators;
  const auto ctx = symbolic_boost_context(gens, opt.mass);
  for (const auto& op : rep.raw_basis) {
    const ComplexRational c = rnd.complex();
    EXPECT_TRUE(verify_invariance(scale(c, op), ctx));
  }
}

TEST(Family, FourComponentFirstOrder) {
  for (const Rational& m : {Rational(1), Rational(5, 3)}) {
    FamilyOptions opt;
    opt.mass = m;
    const FamilyReport rep = invariant_family(opt);
    EXPECT_FALSE(rep.calibration.trivial);
    EXPECT_TRUE(rep.calibration.verified);
    EXPECT_TRUE(rep.calibration.constant_block_matches);
    EXPECT_EQ(rep.calibration.lambda, ComplexRational(Rational(0), Rational(-1, 2)));
    EXPECT_EQ(rep.raw_basis.size(), 4u);
    EXPECT_EQ(rep.degenerate_basis.size(), 3u);
    ASSERT_EQ(rep.dimension(), 1u);
    EXPECT_EQ(rep.family[0], four_component_operator(m));
  }
}

TEST(Family, LowerDimensions) {
  FamilyOptions two;
  two.ncomp = 2;
  const FamilyReport r2 = invariant_family(two);
  EXPECT_TRUE(r2.calibration.trivial);
  EXPECT_EQ(r2.dimension(), 0u);

  FamilyOptions one;
  one.ncomp = 1;
  one.order = 2;
  one.mass = Rational(7, 2);
  const FamilyReport r1 = invariant_family(one);
  ASSERT_EQ(r1.dimension(), 1u);
  EXPECT_TRUE(projectively_equal(r1.family[0], schrodinger(1, one.mass)));
}

TEST(Family, SecondOrderWithoutMixedTerms) {
  FamilyOptions opt;
  opt.order = 2;
  opt.forbid_mixed = true;
  const FamilyReport rep = invariant_family(opt);
  ASSERT_EQ(rep.dimension(), 2u);
  const DiffOp L = four_component_operator(opt.mass);
  const std::vector<DiffOp> expected{L, schrodinger(4, opt.mass)};
  EXPECT_TRUE(same_span(vectors_of(rep.ansatz, rep.family), vectors_of(rep.ansatz, expected)));
  // The square of L has no mixed terms and is Schrodinger up to a factor.
  const DiffOp L2 = multiply_ops(L, L);
  EXPECT_TRUE(mixed_term_report(L2).empty());
  EXPECT_TRUE(projectively_equal(L2, schrodinger(4, opt.mass)));
}

TEST(Family, HigherOrdersAreSpannedByPowers) {
  const DiffOp L = four_component_operator(Rational(1));
  for (bool forbid : {true, false}) {
    for (int order = 2; order <= 4; ++order) {
      FamilyOptions opt;
      opt.order = order;
      opt.forbid_mixed = forbid;
      const FamilyReport rep = invariant_family(opt);
      std::vector<DiffOp> powers;
      for (int n = 1; n <= (forbid ? 2 : order); ++n) powers.push_back(op_power(L, n));
      EXPECT_TRUE(same_span(vectors_of(rep.ansatz, rep.family), vectors_of(rep.ansatz, powers)))
          << "order " << order << " forbid " << forbid;
    }
  }
}

TEST(Family, RejectsBadOptions) {
  FamilyOptions opt;
  opt.ncomp = 3;
  EXPECT_THROW(invariant_family(opt), std::invalid_argument);
  opt.ncomp = 4;
  opt.order = 0;
  EXPECT_THROW(invariant_family(opt), std::invalid_argument);
  opt.order = 1;
  opt.mass = 0;
  EXPECT_THROW(invariant_family(opt), std::invalid_argument);
}

TEST(Oracle, TwoComponentFirstOrder) {
  const Rational m(1);
  const GeneratorSet gens = calibrated_representation(2, m).generators;
  const Ansatz ansatz(2, 1, false);
  const auto engine = nullspace(derive_constraints(ansatz, generating_contexts(gens, m)).system).basis;
  const auto oracle = oracle_nullspace(ansatz, gens, m, 101);
  EXPECT_EQ(oracle.size(), engine.size());
  EXPECT_TRUE(same_span(oracle, engine));
}

TEST(Oracle, FourComponentFirstOrder) {
  const Rational m(3, 2);
  const GeneratorSet gens = calibrated_representation(4, m).generators;
  const Ansatz ansatz(4, 1, false);
  const auto engine = nullspace(derive_constraints(ansatz, generating_contexts(gens, m)).system).basis;
  const auto oracle = oracle_nullspace(ansatz, gens, m, 202);
  EXPECT_EQ(oracle.size(), 4u);
  EXPECT_TRUE(same_span(oracle, engine));
}

TEST(Oracle, FourComponentSecondOrderWithoutMixedTerms) {
  const Rational m(1);
  const GeneratorSet gens = calibrated_representation(4, m).generators;
  const Ansatz ansatz(4, 2, true);
  const auto engine = nullspace(derive_constraints(ansatz, generating_contexts(gens, m)).system).basis;
  const auto oracle = oracle_nullspace(ansatz, gens, m, 303);
  EXPECT_EQ(oracle.size(), engine.size());
  EXPECT_TRUE(same_span(oracle, engine));
}

TEST(Cascade, StagesFitShapes) {
  const CascadeReport rep = first_order_cascade(Rational(1));
  ASSERT_EQ(rep.stages.size(), 5u);
  EXPECT_EQ(rep.degenerate_dimension, 3u);
  const std::array<std::size_t, 5> dims{12, 10, 6, 4, 4};
  const std::array<std::size_t, 5> shape_dims{12, 10, 7, 3, 1};
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_EQ(rep.stages[k].dimension, dims[k]) << rep.stages[k].name;
    EXPECT_EQ(rep.stages[k].shape_dimension, shape_dims[k]) << rep.stages[k].name;
    EXPECT_TRUE(rep.stages[k].fits_modulo_degenerate) << rep.stages[k].name;
    EXPECT_TRUE(rep.stages[k].printed_equal_modulo_degenerate) << rep.stages[k].name;
    EXPECT_EQ(rep.stages[k].printed_exact, k < 3) << rep.stages[k].name;
  }
  EXPECT_EQ(rep.stages[2].printed, std::vector<std::string>{"B2j"});
  EXPECT_TRUE(rep.stages[0].exact);
  EXPECT_TRUE(rep.stages[1].exact);
  EXPECT_FALSE(rep.stages[2].equal_modulo_degenerate);
  EXPECT_TRUE(rep.stages[3].equal_modulo_degenerate);
  EXPECT_TRUE(rep.stages[4].equal_modulo_degenerate);
}

}  // namespace
}  // namespace galinv
