#pragma once

#include "galinv/exact/matrix.hpp"

namespace galinv {

/// Standard Pauli matrix sigma_j for j in {1,2,3}; throws std::out_of_range otherwise.
MatrixCR pauli(int j);

/// Levi-Civita symbol over {1,2,3}.
int levi_civita(int i, int j, int k);

/// N x N identity / zero over Q(i).
MatrixCR identity_cr(std::size_t n);
MatrixCR zero_cr(std::size_t rows, std::size_t cols);

}  // namespace galinv
