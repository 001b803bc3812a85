#include <gtest/gtest.h>

#include "galinv/exact/pauli.hpp"
#include "galinv/galilei/group.hpp"
#include "galinv/galilei/representation.hpp"
#include "support.hpp"

using namespace galinv;
using galinv::testing::RandomExact;

namespace {

const ComplexRational I = ComplexRational::i();

GalileiElement random_element(RandomExact& rnd) {
  GalileiElement g;
  Quaternion q{rnd.rational(), rnd.rational(), rnd.rational(), rnd.rational()};
  if (q.norm2() == 0) q.w = 1;
  g.R = rotation_from_quaternion(q);
  for (std::size_t i = 0; i < 3; ++i) {
    g.v[i] = rnd.rational();
    g.a[i] = rnd.rational();
  }
  g.b = rnd.rational();
  return g;
}

MatrixCR lower_left(const MatrixCR& blk) { return from_blocks(zero_cr(2, 2), zero_cr(2, 2), blk, zero_cr(2, 2)); }

}  // namespace

TEST(GroupTest, CompositionExamples) {
  RandomExact rnd(21);
  const GalileiElement g = random_element(rnd);
  EXPECT_EQ(compose(GalileiElement::identity(), g), g);
  EXPECT_EQ(compose(g, GalileiElement::identity()), g);

  const auto b1 = GalileiElement::boost({1, Rational(1, 2), 0});
  const auto b2 = GalileiElement::boost({-3, 2, Rational(5, 7)});
  EXPECT_EQ(compose(b2, b1), GalileiElement::boost({-2, Rational(5, 2), Rational(5, 7)}));

  GalileiElement g2 = GalileiElement::boost({1, 0, 0});
  GalileiElement g1;
  g1.a = {0, 1, 0};
  g1.b = 2;
  const GalileiElement h = compose(g2, g1);
  EXPECT_EQ(h.a, (Vec3{-2, 1, 0}));
  EXPECT_EQ(h.b, Rational(2));
  EXPECT_EQ(h.v, (Vec3{1, 0, 0}));
}

TEST(GroupTest, InverseExamples) {
  EXPECT_EQ(inverse(GalileiElement::identity()), GalileiElement::identity());
  EXPECT_EQ(inverse(GalileiElement::boost({1, -2, Rational(1, 3)})),
            GalileiElement::boost({-1, 2, Rational(-1, 3)}));
  GalileiElement g;
  g.R = rotation_from_quaternion({2, 0, 0, 1});
  g.v = {1, 0, 0};
  g.a = {0, 0, 1};
  g.b = 3;
  const GalileiElement h = inverse(g);
  EXPECT_EQ(h.R, mat3_transpose(g.R));
  EXPECT_EQ(h.b, Rational(-3));
  // R^T (a + v b) with a + v b = (3, 0, 1).
  EXPECT_EQ(h.a, (Vec3{Rational(-9, 5), Rational(12, 5), -1}));
}

TEST(GroupTest, AxiomsRandomized) {
  RandomExact rnd(22);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_element(rnd), y = random_element(rnd), z = random_element(rnd);
    ASSERT_TRUE(is_valid(x));
    EXPECT_EQ(compose(compose(x, y), z), compose(x, compose(y, z)));
    EXPECT_EQ(compose(inverse(x), x), GalileiElement::identity());
    EXPECT_EQ(compose(x, inverse(x)), GalileiElement::identity());
    EXPECT_TRUE(is_valid(compose(x, y)));
    EXPECT_TRUE(is_valid(inverse(x)));
  }
}

TEST(GroupTest, SymbolicBoostsCompose) {
  const SymbolicGalileiElement b1 = SymbolicGalileiElement::boost({VPoly::var(0), 0, 0});
  const SymbolicGalileiElement b2 = SymbolicGalileiElement::boost({0, VPoly::var(1), VPoly::var(2)});
  EXPECT_EQ(compose(b2, b1), compose(b1, b2));
  EXPECT_EQ(compose(inverse(b1), b1), SymbolicGalileiElement::identity());
}

TEST(GroupTest, QuaternionRoundTrip) {
  RandomExact rnd(23);
  for (int t = 0; t < 50; ++t) {
    Quaternion q{rnd.rational(), rnd.rational(), rnd.rational(), rnd.rational()};
    if (q.norm2() == 0) continue;
    const Mat3 r = rotation_from_quaternion(q);
    EXPECT_EQ(mat3_mul(mat3_transpose(r), r), mat3_identity<Rational>());
    EXPECT_EQ(det3(r), Rational(1));
    EXPECT_EQ(rotation_from_quaternion(quaternion_from_rotation(r)), r);
  }
  // Half-turn about x: trace + 1 = 0 branch.
  const Mat3 half = rotation_from_quaternion({0, 1, 0, 0});
  EXPECT_EQ(rotation_from_quaternion(quaternion_from_rotation(half)), half);
  EXPECT_THROW(rotation_from_quaternion({0, 0, 0, 0}), std::invalid_argument);
}

TEST(RepresentationTest, StandardRotationGenerators) {
  for (int n : {1, 2, 4}) EXPECT_TRUE(satisfies_rotation_algebra(standard_rotation_generators(n)));
  EXPECT_THROW(standard_rotation_generators(3), std::invalid_argument);
  GeneratorTriple bad = standard_rotation_generators(2);
  bad[0] = pauli(1);
  EXPECT_FALSE(satisfies_rotation_algebra(bad));
  EXPECT_THROW(solve_boost_generators(bad), RotationAlgebraError);
}

TEST(RepresentationTest, TwoComponentBoostsOnlyZero) {
  const BoostSolution sol = solve_boost_generators(standard_rotation_generators(2));
  EXPECT_TRUE(sol.commuting.empty());
  ASSERT_TRUE(sol.only_zero.has_value());
  EXPECT_TRUE(*sol.only_zero);
  // The linear relations alone admit X_v = c sigma; the commuting relation removes it.
  ASSERT_EQ(sol.basis.size(), 1u);
  EXPECT_EQ(sol.failing, (std::vector<std::size_t>{0}));
}

TEST(RepresentationTest, ScalarBoostsOnlyZero) {
  const BoostSolution sol = solve_boost_generators(standard_rotation_generators(1));
  EXPECT_TRUE(sol.basis.empty());
  EXPECT_TRUE(sol.only_zero.value_or(false));
}

TEST(RepresentationTest, FourComponentNilpotentFamily) {
  const GeneratorTriple rot = standard_rotation_generators(4);
  const BoostSolution sol = solve_boost_generators(rot);
  EXPECT_EQ(sol.basis.size(), 4u);
  ASSERT_TRUE(sol.only_zero.has_value());
  EXPECT_FALSE(*sol.only_zero);
  for (const auto& t : sol.basis) EXPECT_TRUE(boost_rotation_relations_hold(t, rot));
  for (std::size_t k : sol.commuting) EXPECT_TRUE(boost_generators_commute(sol.basis[k]));
  for (std::size_t k : sol.failing) EXPECT_FALSE(boost_generators_commute(sol.basis[k]));
  EXPECT_EQ(sol.commuting.size() + sol.failing.size(), sol.basis.size());

  // lambda * (lower-left sigma) lies in the span and commutes.
  const GeneratorTriple fam{lower_left(pauli(1)), lower_left(pauli(2)), lower_left(pauli(3))};
  EXPECT_TRUE(boost_rotation_relations_hold(fam, rot));
  EXPECT_TRUE(boost_generators_commute(fam));
  std::vector<Vector> span;
  auto flat = [](const GeneratorTriple& t) {
    Vector v;
    for (const auto& m : t) v.insert(v.end(), m.data().begin(), m.data().end());
    return v;
  };
  for (const auto& t : sol.basis) span.push_back(flat(t));
  EXPECT_TRUE(in_span(span, flat(scale(ComplexRational(Rational(7, 3)), fam))));
}

TEST(RepresentationTest, BoostMatrix) {
  const std::array<VPoly, 3> v{VPoly::var(0), VPoly::var(1), VPoly::var(2)};
  EXPECT_EQ(boost_matrix(zero_triple(4), v), MatrixVP::identity(4));

  const ComplexRational lambda(Rational(-1, 2));
  const GeneratorTriple fam = scale(lambda, GeneratorTriple{lower_left(pauli(1)), lower_left(pauli(2)), lower_left(pauli(3))});
  const MatrixVP b = boost_matrix(fam, v);
  MatrixVP expected = MatrixVP::identity(4);
  for (int j = 1; j <= 3; ++j) {
    expected += scale(VPoly(I * lambda) * v[static_cast<std::size_t>(j - 1)], convert<VPoly>(lower_left(pauli(j))));
  }
  EXPECT_EQ(b, expected);

  const std::array<VPoly, 3> minus_v{-v[0], -v[1], -v[2]};
  EXPECT_EQ(b * boost_matrix(fam, minus_v), MatrixVP::identity(4));

  const std::array<VPoly, 3> w{VPoly::var(2), VPoly(ComplexRational(Rational(1, 3))), VPoly::var(0) * VPoly::var(1)};
  const std::array<VPoly, 3> vw{v[0] + w[0], v[1] + w[1], v[2] + w[2]};
  EXPECT_EQ(boost_matrix(fam, v) * boost_matrix(fam, w), boost_matrix(fam, w) * boost_matrix(fam, v));
  EXPECT_EQ(boost_matrix(fam, v) * boost_matrix(fam, w), boost_matrix(fam, vw));

  EXPECT_THROW(boost_matrix(standard_rotation_generators(2), v), NotNilpotent);
}

TEST(RepresentationTest, RotationConjugation) {
  const SpinorRep rep = spinor_rotation(standard_rotation_generators(2), {2, 0, 0, 1});
  EXPECT_EQ(rep.V, scale(ComplexRational(2), identity_cr(2)) - scale(I, pauli(3)));
  EXPECT_EQ(rep.norm2, Rational(5));
  EXPECT_EQ(rotation_conjugate(identity_cr(2), rep), identity_cr(2));
  EXPECT_EQ(rotation_conjugate(pauli(1), rep),
            scale(ComplexRational(Rational(3, 5)), pauli(1)) + scale(ComplexRational(Rational(4, 5)), pauli(2)));
  EXPECT_EQ(rotation_conjugate(pauli(3), rep), pauli(3));
  EXPECT_THROW(rotation_conjugate(identity_cr(4), rep), DimensionError);
}

TEST(RepresentationTest, AdjointActionIsRotation) {
  RandomExact rnd(24);
  const GeneratorTriple rot2 = standard_rotation_generators(2);
  const GeneratorTriple rot4 = standard_rotation_generators(4);
  for (int t = 0; t < 40; ++t) {
    Quaternion q{rnd.rational(), rnd.rational(), rnd.rational(), rnd.rational()};
    if (q.norm2() == 0) continue;
    const SpinorRep rep = spinor_rotation(rot2, q);
    const Mat3 r = adjoint_rotation(rep);
    EXPECT_EQ(mat3_mul(mat3_transpose(r), r), mat3_identity<Rational>());
    EXPECT_EQ(det3(r), Rational(1));
    EXPECT_EQ(r, rotation_from_quaternion(q));
    EXPECT_EQ(spinor_rotation(rot4, q).norm2, q.norm2());
    const MatrixCR h = rnd.matrix(2, 2);
    const MatrixCR herm = h + dagger(h);
    EXPECT_EQ(dagger(rotation_conjugate(herm, rep)), rotation_conjugate(herm, rep));
  }
}

TEST(RepresentationTest, CommutantAndRadical) {
  const GeneratorTriple rot = standard_rotation_generators(4);
  std::vector<MatrixCR> gens(rot.begin(), rot.end());
  EXPECT_EQ(commutant(gens, 4).size(), 4u);
  for (int j = 1; j <= 3; ++j) gens.push_back(lower_left(pauli(j)));
  const auto comm = commutant(gens, 4);
  ASSERT_EQ(comm.size(), 2u);
  const auto rad = algebra_radical(comm);
  ASSERT_EQ(rad.size(), 1u);
  const MatrixCR k = lower_left(identity_cr(2));
  EXPECT_TRUE(in_span({Vector(rad[0].data())}, Vector(k.data())));
  EXPECT_TRUE(algebra_radical({identity_cr(3)}).empty());
}
