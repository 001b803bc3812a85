#pragma once

#include <array>
#include <string>
#include <vector>

#include "galinv/engine/diffop.hpp"
#include "galinv/exact/constraint_system.hpp"
#include "galinv/galilei/group.hpp"
#include "galinv/galilei/representation.hpp"

namespace galinv {

/// psi = spinor * exp(i (k.x - omega t)).
struct PlaneWave {
  std::array<Rational, 3> k{0, 0, 0};
  Rational omega{0};
  Vector spinor;
  Rational mass{1};
};

/// |k|^2 / (2m).
Rational free_frequency(const std::array<Rational, 3>& k, const Rational& mass);

/// op with d_t -> -i omega, d_j -> i k_j.
MatrixCR plane_wave_matrix(const DiffOp& op, const std::array<Rational, 3>& k, const Rational& omega);

struct PlaneWaveReduction {
  MatrixCR matrix;
  /// Basis of annihilated spinors.
  std::vector<Vector> solutions;

  std::size_t nullity() const { return solutions.size(); }
};

PlaneWaveReduction plane_wave_reduce(const DiffOp& op, const PlaneWave& pw);

bool solves(const DiffOp& op, const PlaneWave& pw);

struct DispersionRow {
  std::array<Rational, 3> k;
  Rational omega;
  std::size_t nullity = 0;
  bool on_shell = false;
};

/// Nullity at every (k, omega) pair.
std::vector<DispersionRow> dispersion_scan(const DiffOp& op, const Rational& mass,
                                           const std::vector<std::array<Rational, 3>>& ks,
                                           const std::vector<Rational>& omegas);

/// "k1,k2,k3,omega,on_shell,nullity" header plus one line per row.
std::string to_csv(const std::vector<DispersionRow>& rows);

/// Sign s in k' = R k + s m v, omega' = omega + (R k).v + s m v^2 / 2, as
/// established by covariance_check on the Schrodinger phase.
inline constexpr int kBoostPhaseSign = 1;

struct CovarianceReport {
  bool input_solves = false;
  /// Image for each candidate sign (+1, -1) solves op.
  std::array<bool, 2> candidate_solves{false, false};
  /// Unique sign whose image solves op, 0 if none or both.
  int derived_sign = 0;
  /// Image under kBoostPhaseSign, up to a constant phase.
  PlaneWave image;
  bool image_solves = false;
  bool image_on_shell = false;
};

/// Moves pw by the finite transformation g (coordinates, spinor matrix, phase).
CovarianceReport covariance_check(const DiffOp& op, const PlaneWave& pw, const GalileiElement& g,
                                  const GeneratorSet& gens);

}  // namespace galinv
