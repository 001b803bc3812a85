#include "galinv/engine/oracle.hpp"

#include <random>

#include "galinv/exact/pauli.hpp"

namespace galinv {

namespace {

const ComplexRational I_(Rational(0), Rational(1));

struct Sampler {
  std::mt19937 rng;
  Rational rational(int max_num, int max_den) {
    Rational q(std::uniform_int_distribution<int>(-max_num, max_num)(rng),
               std::uniform_int_distribution<int>(1, max_den)(rng));
    q.canonicalize();
    return q;
  }
};

MatrixCR series_exp(const MatrixCR& a) {
  const std::size_t n = a.rows();
  MatrixCR out = identity_cr(n);
  MatrixCR term = identity_cr(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = scale(ComplexRational(Rational(1, static_cast<long>(k))), term * a);
    out += term;
  }
  if (!(term * a).is_zero()) throw NotNilpotent("boost generator combination is not nilpotent");
  return out;
}

struct Element {
  MatrixCR rho;
  MatrixCR rho_inv;
  Mat3 R;
  std::array<Rational, 3> v;
};

Element element(const GeneratorSet& gens, const Quaternion& q, const std::array<Rational, 3>& v) {
  const std::size_t n = gens.ncomp();
  const GeneratorTriple xb = gens.effective_boost();
  MatrixCR vx(n, n);
  for (std::size_t j = 0; j < 3; ++j) vx += scale(ComplexRational(v[j]), xb[j]);
  MatrixCR V = scale(ComplexRational(q.w), identity_cr(n));
  const std::array<Rational, 3> axis{q.x, q.y, q.z};
  for (std::size_t j = 0; j < 3; ++j) V += scale(ComplexRational(Rational(0), -2 * axis[j]), gens.rotation[j]);
  const MatrixCR vvd = V * dagger(V);
  const ComplexRational nrm = vvd(0, 0);
  if (vvd != scale(nrm, identity_cr(n))) throw std::logic_error("rotation generators are not spin generators");
  Element e;
  e.rho = series_exp(scale(I_, vx)) * V;
  e.rho_inv = scale(ComplexRational(1) / nrm, dagger(V)) * series_exp(scale(-I_, vx));
  e.R = rotation_from_quaternion(q);
  e.v = v;
  return e;
}

ComplexRational power(const ComplexRational& x, int n) {
  ComplexRational r(1);
  for (int k = 0; k < n; ++k) r = r * x;
  return r;
}

ComplexRational symbol(const MultiIndex& mi, const ComplexRational& dt, const std::array<ComplexRational, 3>& d) {
  ComplexRational r = power(dt, mi.a);
  for (std::size_t j = 0; j < 3; ++j) r = r * power(d[j], mi.b[j]);
  return r;
}

std::vector<SparseRow> rows_at(const Ansatz& ansatz, const Element& e, const Rational& m, const Rational& w,
                               const std::array<Rational, 3>& k) {
  const std::size_t n = ansatz.ncomp();
  Rational v2 = 0, kv = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    v2 += e.v[j] * e.v[j];
    kv += k[j] * e.v[j];
  }
  const Rational W = w - kv + m * v2 / 2;
  std::array<Rational, 3> K{0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) K[i] += e.R[j][i] * (k[j] - m * e.v[j]);
  }
  const std::array<ComplexRational, 3> moved{ComplexRational(Rational(0), K[0]), ComplexRational(Rational(0), K[1]),
                                             ComplexRational(Rational(0), K[2])};
  const std::array<ComplexRational, 3> frame{ComplexRational(Rational(0), k[0]), ComplexRational(Rational(0), k[1]),
                                             ComplexRational(Rational(0), k[2])};

  std::vector<std::map<UnknownId, ComplexRational>> rows(n * n);
  for (std::size_t s = 0; s < ansatz.slots().size(); ++s) {
    const MultiIndex& mi = ansatz.slots()[s];
    const ComplexRational lhs = symbol(mi, ComplexRational(Rational(0), -W), moved);
    const ComplexRational rhs = symbol(mi, ComplexRational(Rational(0), -w), frame);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        // (rho E_rc rho^-1)_ij = rho(i, r) rho_inv(c, j)
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            ComplexRational coeff = lhs * e.rho(i, r) * e.rho_inv(c, j);
            if (i == r && j == c) coeff -= rhs;
            if (!coeff.is_zero()) rows[i * n + j][ansatz.id(s, r, c)] += coeff;
          }
        }
      }
    }
  }
  std::vector<SparseRow> out;
  for (const auto& r : rows) {
    SparseRow sr = make_row(r);
    if (!sr.empty()) out.push_back(std::move(sr));
  }
  return out;
}

/// RREF basis of span{sum_b c[b] basis[b] : c in ns}.
std::vector<Vector> shrink(const std::vector<Vector>& basis, const Nullspace& ns, std::size_t dim) {
  if (ns.dimension() == basis.size()) return basis;
  std::vector<SparseRow> rows;
  for (const auto& c : ns.basis) {
    Vector x(dim);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (c[b].is_zero()) continue;
      for (std::size_t i = 0; i < dim; ++i) {
        if (!basis[b][i].is_zero()) x[i] += c[b] * basis[b][i];
      }
    }
    rows.push_back(to_sparse(x));
  }
  std::vector<Vector> out;
  for (const auto& r : row_reduce(rows, dim, Exec::Serial).rows) out.push_back(to_dense(r, dim));
  return out;
}

}  // namespace

OracleResult sampled_invariant_space(const Ansatz& ansatz, const GeneratorSet& gens, const Rational& mass,
                                     const OracleOptions& options) {
  const std::size_t dim = ansatz.unknown_count();
  int points = options.points;
  if (points <= 0) {
    // C(order + 4, 4) monomials, plus slack
    long c = 1;
    for (int i = 1; i <= 4; ++i) c = c * (ansatz.order() + i) / i;
    points = static_cast<int>(c) + 2;
  }
  Sampler rnd{std::mt19937(options.seed)};

  // Current solution space in RREF, shrunk after every sample point.
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector e(dim);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  OracleResult result;
  for (int t = 0; t < options.elements && !basis.empty(); ++t) {
    // Pure rotations and pure boosts first: their rows are cheap and cut the
    // space down before general elements are sampled.
    const bool rotate = t % 3 != 1;
    const bool boost = t % 3 != 0;
    Quaternion q;
    if (rotate) {
      do {
        q = {rnd.rational(3, 2), rnd.rational(3, 2), rnd.rational(3, 2), rnd.rational(3, 2)};
      } while (q.norm2() == 0);
    }
    std::array<Rational, 3> v{0, 0, 0};
    if (boost) v = {rnd.rational(3, 2), rnd.rational(3, 2), rnd.rational(3, 2)};
    const Element e = element(gens, q, v);
    for (int p = 0; p < points && !basis.empty(); ++p) {
      const std::array<Rational, 3> k{rnd.rational(5, 1), rnd.rational(5, 1), rnd.rational(5, 1)};
      std::vector<SparseRow> local;
      for (const auto& row : rows_at(ansatz, e, mass, rnd.rational(5, 1), k)) {
        ++result.rows;
        Vector coords(basis.size());
        for (std::size_t b = 0; b < basis.size(); ++b) coords[b] = dot(row, basis[b]);
        local.push_back(to_sparse(coords));
      }
      basis = shrink(basis, nullspace(local, basis.size(), Exec::Serial), dim);
    }
    ++result.elements;
  }
  result.basis = std::move(basis);
  return result;
}

}  // namespace galinv
