#include "galinv/galilei/representation.hpp"

#include <string>

#include "galinv/exact/pauli.hpp"

namespace galinv {

namespace {

const ComplexRational kI = ComplexRational::i();

MatrixCR matrix_from_vector(const Vector& x, std::size_t offset, std::size_t n) {
  MatrixCR m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = x[offset + r * n + c];
  }
  return m;
}

void require_square_triple(const GeneratorTriple& g, const char* what) {
  const std::size_t n = g[0].rows();
  for (const auto& x : g) {
    if (!x.is_square() || x.rows() != n) throw DimensionError(std::string(what) + ": generators must be equal-size square");
  }
}

}  // namespace

GeneratorTriple standard_rotation_generators(int ncomp) {
  GeneratorTriple g;
  for (int j = 1; j <= 3; ++j) {
    const auto k = static_cast<std::size_t>(j - 1);
    switch (ncomp) {
      case 1:
        g[k] = zero_cr(1, 1);
        break;
      case 2:
        g[k] = scale(ComplexRational(Rational(1, 2)), pauli(j));
        break;
      case 4: {
        const MatrixCR h = scale(ComplexRational(Rational(1, 2)), pauli(j));
        g[k] = from_blocks(h, zero_cr(2, 2), zero_cr(2, 2), h);
        break;
      }
      default:
        throw std::invalid_argument("unsupported spinor dimension " + std::to_string(ncomp));
    }
  }
  return g;
}

bool satisfies_rotation_algebra(const GeneratorTriple& rot) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      MatrixCR rhs(rot[0].rows(), rot[0].cols());
      for (int k = 1; k <= 3; ++k) {
        if (const int e = levi_civita(i, j, k)) rhs += scale(kI * e, rot[static_cast<std::size_t>(k - 1)]);
      }
      if (!(commutator(rot[static_cast<std::size_t>(i - 1)], rot[static_cast<std::size_t>(j - 1)]) == rhs)) return false;
    }
  }
  return true;
}

bool boost_generators_commute(const GeneratorTriple& boost) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!commutator(boost[i], boost[j]).is_zero()) return false;
    }
  }
  return true;
}

bool boost_rotation_relations_hold(const GeneratorTriple& boost, const GeneratorTriple& rot) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      MatrixCR rhs(boost[0].rows(), boost[0].cols());
      for (int k = 1; k <= 3; ++k) {
        if (const int e = levi_civita(i, j, k)) rhs += scale(kI * e, boost[static_cast<std::size_t>(k - 1)]);
      }
      if (!(commutator(boost[static_cast<std::size_t>(i - 1)], rot[static_cast<std::size_t>(j - 1)]) == rhs)) {
        return false;
      }
    }
  }
  return true;
}

GeneratorTriple scale(const ComplexRational& s, const GeneratorTriple& g) {
  return {scale(s, g[0]), scale(s, g[1]), scale(s, g[2])};
}

GeneratorTriple zero_triple(std::size_t n) { return {zero_cr(n, n), zero_cr(n, n), zero_cr(n, n)}; }

bool is_zero(const GeneratorTriple& g) { return g[0].is_zero() && g[1].is_zero() && g[2].is_zero(); }

BoostSolution solve_boost_generators(const GeneratorTriple& rot) {
  require_square_triple(rot, "solve_boost_generators");
  if (!satisfies_rotation_algebra(rot)) {
    throw RotationAlgebraError("rotation generators violate [X_i, X_j] = i eps_ijk X_k");
  }
  const std::size_t n = rot[0].rows();
  const std::size_t nn = n * n;
  ConstraintSystem sys;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        sys.unknowns.push_back("X" + std::to_string(i + 1) + "_" + std::to_string(r) + std::to_string(c));
      }
    }
  }
  auto id = [&](std::size_t i, std::size_t r, std::size_t c) { return static_cast<UnknownId>(i * nn + r * n + c); };

  // Entry (r, c) of [X_vi, X_thj] - i eps_ijk X_vk.
  for (int i = 1; i <= 3; ++i) {
    const auto vi = static_cast<std::size_t>(i - 1);
    for (int j = 1; j <= 3; ++j) {
      const MatrixCR& th = rot[static_cast<std::size_t>(j - 1)];
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          std::map<UnknownId, ComplexRational> row;
          for (std::size_t s = 0; s < n; ++s) {
            if (!th(s, c).is_zero()) row[id(vi, r, s)] += th(s, c);
            if (!th(r, s).is_zero()) row[id(vi, s, c)] -= th(r, s);
          }
          for (int k = 1; k <= 3; ++k) {
            if (const int e = levi_civita(i, j, k)) row[id(static_cast<std::size_t>(k - 1), r, c)] -= kI * e;
          }
          sys.add_row(row);
        }
      }
    }
  }

  const Nullspace ns = nullspace(sys);
  BoostSolution sol;
  sol.constraint_rows = sys.rows.size();
  sol.rank = ns.rank;
  for (std::size_t b = 0; b < ns.basis.size(); ++b) {
    GeneratorTriple t;
    for (std::size_t i = 0; i < 3; ++i) t[i] = matrix_from_vector(ns.basis[b], i * nn, n);
    (boost_generators_commute(t) ? sol.commuting : sol.failing).push_back(b);
    sol.basis.push_back(std::move(t));
  }
  if (sol.basis.empty()) {
    sol.only_zero = true;
  } else if (!sol.commuting.empty()) {
    sol.only_zero = false;
  } else if (sol.basis.size() == 1) {
    // Commutators scale quadratically, so every nonzero multiple fails too.
    sol.only_zero = true;
  }
  return sol;
}

MatrixVP boost_matrix(const GeneratorTriple& boost, const std::array<VPoly, 3>& v) {
  require_square_triple(boost, "boost_matrix");
  const std::size_t n = boost[0].rows();
  MatrixVP x(n, n);
  for (std::size_t j = 0; j < 3; ++j) x += scale(VPoly(kI) * v[j], convert<VPoly>(boost[j]));

  MatrixVP result = MatrixVP::identity(n);
  MatrixVP power = MatrixVP::identity(n);
  Rational factorial = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * x;
    if (power.is_zero()) return result;
    factorial *= static_cast<long>(k);
    result += scale(VPoly(ComplexRational(Rational(1) / factorial)), power);
  }
  throw NotNilpotent("boost generator combination is not nilpotent");
}

SpinorRep spinor_rotation(const GeneratorTriple& rot, const Quaternion& q) {
  require_square_triple(rot, "spinor_rotation");
  const std::size_t n = rot[0].rows();
  MatrixCR v = scale(ComplexRational(q.w), identity_cr(n));
  const std::array<Rational, 3> axis{q.x, q.y, q.z};
  for (std::size_t k = 0; k < 3; ++k) v -= scale(ComplexRational(0, 2 * axis[k]), rot[k]);
  const MatrixCR vv = v * dagger(v);
  const ComplexRational s = vv(0, 0);
  if (!s.is_real() || sgn(s.re()) <= 0 || !(vv == scale(s, identity_cr(n)))) {
    throw std::domain_error("rotation representative is not a multiple of a unitary");
  }
  return {std::move(v), s.re()};
}

MatrixCR rotation_conjugate(const MatrixCR& B, const SpinorRep& rep) {
  if (B.rows() != rep.V.rows() || B.cols() != rep.V.cols()) {
    throw DimensionError("rotation_conjugate: matrix and representation sizes differ");
  }
  return scale(ComplexRational(Rational(1) / rep.norm2), rep.V * B * dagger(rep.V));
}

Mat3 adjoint_rotation(const SpinorRep& rep) {
  if (rep.V.rows() != 2) throw DimensionError("adjoint_rotation requires a 2x2 representative");
  Mat3 r{};
  const MatrixCR vd = dagger(rep.V);
  for (int i = 1; i <= 3; ++i) {
    const MatrixCR img = rep.V * pauli(i) * vd;
    for (int k = 1; k <= 3; ++k) {
      const ComplexRational t = trace(pauli(k) * img) / ComplexRational(2 * rep.norm2);
      if (!t.is_real()) throw std::domain_error("adjoint action has a non-real entry");
      r[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] = t.re();
    }
  }
  return r;
}

std::vector<MatrixCR> commutant(const std::vector<MatrixCR>& generators, std::size_t n) {
  std::vector<SparseRow> rows;
  for (const auto& x : generators) {
    if (x.rows() != n || x.cols() != n) throw DimensionError("commutant: generator size mismatch");
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        std::map<UnknownId, ComplexRational> row;
        for (std::size_t s = 0; s < n; ++s) {
          if (!x(s, c).is_zero()) row[static_cast<UnknownId>(r * n + s)] += x(s, c);
          if (!x(r, s).is_zero()) row[static_cast<UnknownId>(s * n + c)] -= x(r, s);
        }
        rows.push_back(make_row(row));
      }
    }
  }
  std::vector<MatrixCR> out;
  for (const auto& b : nullspace(rows, n * n, Exec::Serial).basis) out.push_back(matrix_from_vector(b, 0, n));
  return out;
}

std::vector<MatrixCR> algebra_radical(const std::vector<MatrixCR>& algebra_basis) {
  const std::size_t d = algebra_basis.size();
  std::vector<SparseRow> rows;
  for (std::size_t a = 0; a < d; ++a) {
    std::map<UnknownId, ComplexRational> row;
    for (std::size_t b = 0; b < d; ++b) row[static_cast<UnknownId>(b)] = trace(algebra_basis[a] * algebra_basis[b]);
    rows.push_back(make_row(row));
  }
  std::vector<MatrixCR> out;
  if (d == 0) return out;
  const std::size_t n = algebra_basis[0].rows();
  for (const auto& x : nullspace(rows, d, Exec::Serial).basis) {
    MatrixCR m(n, n);
    for (std::size_t a = 0; a < d; ++a) {
      if (!x[a].is_zero()) m += scale(x[a], algebra_basis[a]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace galinv
