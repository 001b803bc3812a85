#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "galinv/exact/constraint_system.hpp"
#include "galinv/exact/matrix.hpp"
#include "galinv/galilei/group.hpp"

namespace galinv {

/// Three N x N matrices (X_1, X_2, X_3).
using GeneratorTriple = std::array<MatrixCR, 3>;

class RotationAlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotNilpotent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rotation generators X_theta for the supported spinor sizes:
/// N=1 zeros, N=2 sigma/2, N=4 diag(sigma, sigma)/2.
GeneratorTriple standard_rotation_generators(int ncomp);

/// [X_i, X_j] = i eps_ijk X_k.
bool satisfies_rotation_algebra(const GeneratorTriple& rot);
/// [X_vi, X_vj] = 0.
bool boost_generators_commute(const GeneratorTriple& boost);
/// [X_vi, X_theta_j] = i eps_ijk X_vk.
bool boost_rotation_relations_hold(const GeneratorTriple& boost, const GeneratorTriple& rot);

GeneratorTriple scale(const ComplexRational& s, const GeneratorTriple& g);
GeneratorTriple zero_triple(std::size_t n);
bool is_zero(const GeneratorTriple& g);

/// Rotation and boost generators of one spinor representation, plus the
/// free scale multiplying the boost generators.
struct GeneratorSet {
  GeneratorTriple rotation;
  /// Unit boost generators; the effective generators are family_parameter * boost.
  GeneratorTriple boost;
  ComplexRational family_parameter{1};

  std::size_t ncomp() const { return rotation[0].rows(); }
  GeneratorTriple effective_boost() const { return scale(family_parameter, boost); }
};

/// Solution space of the linear boost-generator relations for fixed rotation
/// generators. The quadratic relation [X_vi, X_vj] = 0 is checked per basis element.
struct BoostSolution {
  std::vector<GeneratorTriple> basis;
  /// Indices into basis of elements that also commute.
  std::vector<std::size_t> commuting;
  /// Indices into basis of elements violating [X_vi, X_vj] = 0.
  std::vector<std::size_t> failing;
  /// True when the full (quadratic) solution set is only the zero triple;
  /// nullopt when that cannot be decided from the basis alone.
  std::optional<bool> only_zero;
  std::size_t constraint_rows = 0;
  std::size_t rank = 0;
};

/// Throws RotationAlgebraError if rot violates its own commutation relations.
BoostSolution solve_boost_generators(const GeneratorTriple& rot);

/// exp(i sum_j X_j v_j) as a terminating series. Throws NotNilpotent unless
/// (sum_j X_j v_j)^N = 0.
MatrixVP boost_matrix(const GeneratorTriple& boost, const std::array<VPoly, 3>& v);

/// Unnormalised unitary: V V^dagger = norm2 * I.
struct SpinorRep {
  MatrixCR V;
  Rational norm2{1};
};

/// V = w I - 2i (x X_1 + y X_2 + z X_3). For spin-1/2 generators this is a rational
/// multiple of the SU(2) element of the quaternion. Throws if V V^dagger is not scalar.
SpinorRep spinor_rotation(const GeneratorTriple& rot, const Quaternion& q);

/// V B V^dagger / norm2.
MatrixCR rotation_conjugate(const MatrixCR& B, const SpinorRep& rep);

/// 3x3 matrix of the adjoint action on span{sigma}: V sigma_i V^dagger / norm2 = sum_k R_ki sigma_k.
/// rep must be 2x2.
Mat3 adjoint_rotation(const SpinorRep& rep);

/// Generators of the commutant: all M with [M, X] = 0 for every given X.
std::vector<MatrixCR> commutant(const std::vector<MatrixCR>& generators, std::size_t n);

/// Jacobson radical of a matrix algebra given by a basis, via the trace form
/// (characteristic zero): {x : tr(x y) = 0 for all y}.
std::vector<MatrixCR> algebra_radical(const std::vector<MatrixCR>& algebra_basis);

}  // namespace galinv
