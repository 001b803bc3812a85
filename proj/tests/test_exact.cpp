#include <gtest/gtest.h>

#include "galinv/exact/complex_rational.hpp"
#include "galinv/exact/constraint_system.hpp"
#include "galinv/exact/linform.hpp"
#include "galinv/exact/matrix.hpp"
#include "galinv/exact/pauli.hpp"
#include "galinv/exact/vpoly.hpp"
#include "support.hpp"

using namespace galinv;
using galinv::testing::RandomExact;

namespace {

const ComplexRational I = ComplexRational::i();

// Dense elimination over Q(i) written independently of the library: returns the rank.
std::size_t oracle_rank(std::vector<Vector> m) {
  std::size_t rank = 0;
  const std::size_t ncols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t p = rank;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      const ComplexRational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<SparseRow> random_rows(RandomExact& rnd, std::size_t nrows, std::size_t ncols, double density) {
  std::vector<SparseRow> rows;
  for (std::size_t r = 0; r < nrows; ++r) {
    std::map<UnknownId, ComplexRational> m;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (std::bernoulli_distribution(density)(rnd.engine())) m[static_cast<int>(c)] = rnd.complex(4, 3);
    }
    rows.push_back(make_row(m));
  }
  // Dependent rows exercise rank deficiency.
  for (std::size_t k = 0; k + 1 < nrows; k += 3) {
    std::map<UnknownId, ComplexRational> m;
    const ComplexRational a = rnd.complex(3, 2), b = rnd.complex(3, 2);
    for (const auto& [c, x] : rows[k]) m[c] += a * x;
    for (const auto& [c, x] : rows[k + 1]) m[c] += b * x;
    rows.push_back(make_row(m));
  }
  return rows;
}

}  // namespace

TEST(ComplexRationalTest, ArithmeticAndFormatting) {
  const ComplexRational a(Rational(1, 2), Rational(-3, 4));
  EXPECT_EQ((a * a.conj()).to_string(), "13/16");
  EXPECT_EQ((I * I), ComplexRational(-1));
  EXPECT_EQ((-I).to_string(), "-i");
  EXPECT_EQ(ComplexRational(Rational(3, 5), Rational(4, 5)).to_string(), "3/5+4/5i");
  EXPECT_EQ(ComplexRational(1) / (ComplexRational(2) - I), ComplexRational(Rational(2, 5), Rational(1, 5)));
  EXPECT_THROW(a / ComplexRational(), DivisionByZero);
}

TEST(ComplexRationalTest, CheckedArithmetic) {
  EXPECT_FALSE(cr_arith(1, 0, ArithOp::Div).has_value());
  EXPECT_EQ(*cr_arith(I, 2, ArithOp::Div), ComplexRational(0, Rational(1, 2)));
  EXPECT_EQ(*cr_arith(3, I, ArithOp::Sub), ComplexRational(3, -1));
  EXPECT_EQ(*cr_arith(3, I, ArithOp::Add), ComplexRational(3, 1));
  EXPECT_EQ(*cr_arith(3, I, ArithOp::Mul), ComplexRational(0, 3));
}

TEST(ComplexRationalTest, ParseRational) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("+2/3"), Rational(2, 3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
}

TEST(ComplexRationalTest, FieldAxiomsRandomized) {
  RandomExact rnd(11);
  for (int t = 0; t < 200; ++t) {
    const auto x = rnd.complex(), y = rnd.complex(), z = rnd.complex();
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    EXPECT_EQ((x * y).norm2(), x.norm2() * y.norm2());
    if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
  }
}

TEST(VPolyTest, FormattingAndDegree) {
  const VPoly v1 = VPoly::var(0), v2 = VPoly::var(1), v3 = VPoly::var(2);
  EXPECT_EQ((v1 * v2).to_string(), "v1*v2");
  EXPECT_EQ((v1 * v1 - ComplexRational(0, Rational(1, 2)) * v3).to_string(), "v1^2 - 1/2i*v3");
  EXPECT_EQ(pow(v1 + v2, 3).degree(), 3);
  EXPECT_TRUE((v1 - v1).is_zero());
  EXPECT_EQ(VPoly(5).constant(), ComplexRational(5));
  EXPECT_THROW(pow(v1, -1), std::invalid_argument);
}

TEST(VPolyTest, EvaluationIsRingHomomorphism) {
  RandomExact rnd(12);
  auto random_poly = [&] {
    VPoly p;
    for (int t = 0; t < 4; ++t) p.add_term({rnd.integer(0, 2), rnd.integer(0, 2), rnd.integer(0, 2)}, rnd.complex());
    return p;
  };
  for (int t = 0; t < 50; ++t) {
    const VPoly p = random_poly(), q = random_poly();
    const std::array<ComplexRational, 3> at{rnd.complex(), rnd.complex(), rnd.complex()};
    EXPECT_EQ((p * q).evaluate(at), p.evaluate(at) * q.evaluate(at));
    EXPECT_EQ((p - q).evaluate(at), p.evaluate(at) - q.evaluate(at));
    EXPECT_EQ(pow(p, 2), p * p);
  }
}

TEST(LinFormTest, CollectAndReassemble) {
  const VPoly v1 = VPoly::var(0), v3 = VPoly::var(2);
  LinForm f = LinForm::unknown(0, v1 * v3 + 2) + LinForm::unknown(2, VPoly(I) * v1) + LinForm(v3);
  f -= LinForm::unknown(0, 2);
  const auto slices = collect_v(f);
  ASSERT_EQ(slices.size(), 3u);
  EXPECT_EQ(slices.at({1, 0, 1}).coeffs.at(0), ComplexRational(1));
  EXPECT_EQ(slices.at({1, 0, 0}).coeffs.at(2), I);
  EXPECT_EQ(slices.at({0, 0, 1}).constant, ComplexRational(1));
  EXPECT_EQ(reassemble(slices), f);

  const std::vector<ComplexRational> values{3, 0, -1};
  EXPECT_EQ(f.substitute(values), VPoly(3) * v1 * v3 - VPoly(I) * v1 + v3);
  EXPECT_TRUE((f - f).is_zero());
}

TEST(MatrixTest, ShapesAndErrors) {
  const MatrixCR a(2, 3), b(2, 2);
  EXPECT_THROW(a * a, DimensionError);
  EXPECT_THROW(a + b, DimensionError);
  EXPECT_THROW(trace(a), DimensionError);
  EXPECT_THROW(commutator(a, a), DimensionError);
  EXPECT_EQ((a * MatrixCR(3, 4)).cols(), 4u);
  EXPECT_EQ(kron(identity_cr(2), pauli(1)).rows(), 4u);
  EXPECT_EQ(to_string(pauli(2)), "[0, -i; i, 0]");
}

TEST(MatrixTest, RingPropertiesRandomized) {
  RandomExact rnd(13);
  for (int t = 0; t < 20; ++t) {
    const MatrixCR x = rnd.matrix(3, 3, 0.7), y = rnd.matrix(3, 3, 0.7), z = rnd.matrix(3, 3, 0.7);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(dagger(x * y), dagger(y) * dagger(x));
    EXPECT_EQ(trace(x * y), trace(y * x));
    // Jacobi identity.
    EXPECT_TRUE((commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y)))
                    .is_zero());
    EXPECT_EQ(kron(x, y) * kron(y, z), kron(x * y, y * z));
  }
}

TEST(PauliTest, ProductIdentity) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      MatrixCR rhs = (i == j) ? identity_cr(2) : zero_cr(2, 2);
      for (int k = 1; k <= 3; ++k) {
        if (const int e = levi_civita(i, j, k)) rhs += scale(I * e, pauli(k));
      }
      EXPECT_EQ(pauli(i) * pauli(j), rhs);
      EXPECT_EQ(anticommutator(pauli(i), pauli(j)), scale(ComplexRational(i == j ? 2 : 0), identity_cr(2)));
    }
    EXPECT_EQ(dagger(pauli(i)), pauli(i));
    EXPECT_TRUE(trace(pauli(i)).is_zero());
  }
  EXPECT_EQ(pauli(1) * pauli(2) * pauli(3), scale(I, identity_cr(2)));
  EXPECT_THROW(pauli(0), std::out_of_range);
  EXPECT_THROW(pauli(4), std::out_of_range);
}

TEST(PauliTest, ContractionIdentityRandomized) {
  RandomExact rnd(14);
  for (int t = 0; t < 30; ++t) {
    std::array<ComplexRational, 3> a, b;
    for (auto& x : a) x = rnd.complex();
    for (auto& x : b) x = rnd.complex();
    MatrixCR sa(2, 2), sb(2, 2), cross(2, 2);
    ComplexRational dotp;
    for (int i = 1; i <= 3; ++i) {
      sa += scale(a[static_cast<std::size_t>(i - 1)], pauli(i));
      sb += scale(b[static_cast<std::size_t>(i - 1)], pauli(i));
      dotp += a[static_cast<std::size_t>(i - 1)] * b[static_cast<std::size_t>(i - 1)];
      for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) {
          if (const int e = levi_civita(i, j, k)) {
            cross += scale(ComplexRational(e) * a[static_cast<std::size_t>(j - 1)] * b[static_cast<std::size_t>(k - 1)],
                           pauli(i));
          }
        }
      }
    }
    EXPECT_EQ(sa * sb, scale(dotp, identity_cr(2)) + scale(I, cross));
  }
}

TEST(NullspaceTest, SmallExample) {
  // x0 + x1 = 0, x2 - i x3 = 0 over four unknowns.
  ConstraintSystem sys;
  sys.unknowns = {"x0", "x1", "x2", "x3"};
  sys.add_row(SparseRow{{0, 1}, {1, 1}});
  sys.add_row(SparseRow{{2, 1}, {3, -I}});
  sys.add_row(SparseRow{{0, 2}, {1, 2}});
  sys.add_row(std::map<UnknownId, ComplexRational>{{0, 0}});
  EXPECT_EQ(sys.rows.size(), 3u);
  const Nullspace ns = nullspace(sys);
  ASSERT_EQ(ns.dimension(), 2u);
  EXPECT_EQ(ns.rank, 2u);
  EXPECT_EQ(ns.free_columns, (std::vector<int>{1, 3}));
  EXPECT_EQ(ns.basis[0], (Vector{-1, 1, 0, 0}));
  EXPECT_EQ(ns.basis[1], (Vector{0, 0, I, 1}));
  EXPECT_THROW(sys.add_row(SparseRow{{7, 1}}), std::out_of_range);
}

TEST(NullspaceTest, MatchesDenseOracleAndIsSound) {
  RandomExact rnd(15);
  for (int t = 0; t < 25; ++t) {
    const std::size_t ncols = static_cast<std::size_t>(rnd.integer(3, 14));
    const std::size_t nrows = static_cast<std::size_t>(rnd.integer(1, 12));
    const auto rows = random_rows(rnd, nrows, ncols, 0.4);
    std::vector<Vector> dense;
    for (const auto& r : rows) dense.push_back(to_dense(r, ncols));

    const Nullspace ns = nullspace(rows, ncols, Exec::Serial);
    EXPECT_EQ(ns.rank, oracle_rank(dense));
    EXPECT_EQ(ns.dimension(), ncols - ns.rank);
    for (const auto& v : ns.basis) {
      for (const auto& r : rows) EXPECT_TRUE(dot(r, v).is_zero());
    }
    if (!ns.basis.empty()) EXPECT_EQ(rank_of(ns.basis), ns.dimension());
  }
}

TEST(NullspaceTest, SerialAndParallelAgree) {
  RandomExact rnd(16);
  for (int t = 0; t < 10; ++t) {
    const auto rows = random_rows(rnd, 150, 40, 0.08);
    EXPECT_EQ(row_reduce(rows, 40, Exec::Serial), row_reduce(rows, 40, Exec::Parallel));
  }
}

TEST(NullspaceTest, SpanHelpers) {
  const std::vector<Vector> a{{1, 0, 1}, {0, 1, 0}};
  const std::vector<Vector> b{{1, 1, 1}, {1, -1, 1}};
  EXPECT_TRUE(same_span(a, b));
  EXPECT_TRUE(in_span(a, Vector{2, I, 2}));
  EXPECT_FALSE(in_span(a, Vector{1, 0, 0}));
  EXPECT_EQ(rank_of({}), 0u);
}
