#include "galinv/calculus/plane_wave.hpp"

#include <sstream>

#include "galinv/engine/transform.hpp"

namespace galinv {

namespace {

ComplexRational ipow(const ComplexRational& x, int n) {
  ComplexRational r(1);
  for (int k = 0; k < n; ++k) r = r * x;
  return r;
}

Vector mat_vec(const MatrixCR& m, const Vector& u) {
  if (m.cols() != u.size()) throw DimensionError("spinor size does not match the operator");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * u[j];
  }
  return out;
}

bool all_zero(const Vector& u) {
  for (const auto& x : u) {
    if (!x.is_zero()) return false;
  }
  return true;
}

PlaneWave moved(const PlaneWave& pw, const GalileiElement& g, const MatrixCR& rho, int sign) {
  PlaneWave out;
  out.mass = pw.mass;
  const auto rk = mat3_apply(g.R, pw.k);
  const Rational v2 = vec3_dot(g.v, g.v);
  for (std::size_t i = 0; i < 3; ++i) out.k[i] = rk[i] + sign * pw.mass * g.v[i];
  out.omega = pw.omega + vec3_dot(rk, g.v) + sign * pw.mass * v2 / 2;
  out.spinor = mat_vec(rho, pw.spinor);
  return out;
}

}  // namespace

Rational free_frequency(const std::array<Rational, 3>& k, const Rational& mass) {
  return vec3_dot(k, k) / (2 * mass);
}

MatrixCR plane_wave_matrix(const DiffOp& op, const std::array<Rational, 3>& k, const Rational& omega) {
  const ComplexRational dt(Rational(0), -omega);
  MatrixCR out(op.ncomp(), op.ncomp());
  for (const auto& [mi, m] : op.terms()) {
    ComplexRational c = ipow(dt, mi.a);
    for (std::size_t j = 0; j < 3; ++j) c = c * ipow(ComplexRational(Rational(0), k[j]), mi.b[j]);
    out += scale(c, m);
  }
  return out;
}

PlaneWaveReduction plane_wave_reduce(const DiffOp& op, const PlaneWave& pw) {
  PlaneWaveReduction r;
  r.matrix = plane_wave_matrix(op, pw.k, pw.omega);
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < r.matrix.rows(); ++i) {
    Vector row(r.matrix.cols());
    for (std::size_t j = 0; j < r.matrix.cols(); ++j) row[j] = r.matrix(i, j);
    rows.push_back(to_sparse(row));
  }
  r.solutions = nullspace(rows, r.matrix.cols(), Exec::Serial).basis;
  return r;
}

bool solves(const DiffOp& op, const PlaneWave& pw) {
  return all_zero(mat_vec(plane_wave_matrix(op, pw.k, pw.omega), pw.spinor));
}

std::vector<DispersionRow> dispersion_scan(const DiffOp& op, const Rational& mass,
                                           const std::vector<std::array<Rational, 3>>& ks,
                                           const std::vector<Rational>& omegas) {
  std::vector<DispersionRow> rows;
  for (const auto& k : ks) {
    for (const auto& w : omegas) rows.push_back({k, w, 0, w == free_frequency(k, mass)});
  }
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < rows.size(); ++i) {
    PlaneWave pw;
    pw.k = rows[i].k;
    pw.omega = rows[i].omega;
    pw.mass = mass;
    rows[i].nullity = plane_wave_reduce(op, pw).nullity();
  }
  return rows;
}

std::string to_csv(const std::vector<DispersionRow>& rows) {
  std::ostringstream os;
  os << "k1,k2,k3,omega,on_shell,nullity\n";
  for (const auto& r : rows) {
    os << to_string(r.k[0]) << ',' << to_string(r.k[1]) << ',' << to_string(r.k[2]) << ',' << to_string(r.omega)
       << ',' << (r.on_shell ? 1 : 0) << ',' << r.nullity << '\n';
  }
  return os.str();
}

CovarianceReport covariance_check(const DiffOp& op, const PlaneWave& pw, const GalileiElement& g,
                                  const GeneratorSet& gens) {
  CovarianceReport rep;
  rep.input_solves = solves(op, pw);
  const MatrixCR rho = evaluate(element_context(gens, g, pw.mass).G, {ComplexRational(0), ComplexRational(0), ComplexRational(0)});
  const std::array<int, 2> signs{1, -1};
  for (std::size_t s = 0; s < 2; ++s) rep.candidate_solves[s] = solves(op, moved(pw, g, rho, signs[s]));
  if (rep.candidate_solves[0] != rep.candidate_solves[1]) rep.derived_sign = rep.candidate_solves[0] ? 1 : -1;
  rep.image = moved(pw, g, rho, kBoostPhaseSign);
  rep.image_solves = solves(op, rep.image);
  rep.image_on_shell = rep.image.omega == free_frequency(rep.image.k, pw.mass);
  return rep;
}

}  // namespace galinv
