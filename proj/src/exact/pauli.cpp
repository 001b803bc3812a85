#include "galinv/exact/pauli.hpp"

#include <string>

namespace galinv {

MatrixCR pauli(int j) {
  const ComplexRational i = ComplexRational::i();
  switch (j) {
    case 1: return MatrixCR{{0, 1}, {1, 0}};
    case 2: return MatrixCR{{0, -i}, {i, 0}};
    case 3: return MatrixCR{{1, 0}, {0, -1}};
    default: throw std::out_of_range("Pauli index must be 1, 2 or 3, got " + std::to_string(j));
  }
}

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (1,2,3).
  if ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) || (i == 3 && j == 1 && k == 2)) return 1;
  return -1;
}

MatrixCR identity_cr(std::size_t n) { return MatrixCR::identity(n); }

MatrixCR zero_cr(std::size_t rows, std::size_t cols) { return MatrixCR(rows, cols); }

}  // namespace galinv
