#pragma once

#include <string>
#include <vector>

#include "galinv/engine/family.hpp"

namespace galinv {

/// One stage of the first-order four-component constraint cascade:
/// rotations first, then the boost conditions from the d_t, d_x and
/// zeroth-order terms, then everything together.
struct CascadeStage {
  std::string name;
  /// Expected block shape, e.g. "B1=[[p,0],[s,p]]".
  std::string shape;
  std::vector<std::string> parameters;
  std::size_t rows = 0;
  std::size_t dimension = 0;
  std::size_t shape_dimension = 0;
  /// Nullspace equals the shape space.
  bool exact = false;
  /// Every nullspace element has the shape, up to the degenerate subspace.
  bool fits_modulo_degenerate = false;
  /// Shape space and nullspace agree up to the degenerate subspace.
  bool equal_modulo_degenerate = false;
  /// Coefficients the stage prints ("B1", "B2j", "B3").
  std::vector<std::string> printed;
  /// Projections onto the printed coefficients agree exactly.
  bool printed_exact = false;
  /// Projections onto the printed coefficients agree up to the projected degenerate subspace.
  bool printed_equal_modulo_degenerate = false;
};

struct CascadeReport {
  std::vector<CascadeStage> stages;
  std::size_t degenerate_dimension = 0;
};

/// Runs the cascade for ncomp = 4, order 1 with the calibrated representation.
CascadeReport first_order_cascade(const Rational& mass, Exec exec = Exec::Parallel);

}  // namespace galinv
