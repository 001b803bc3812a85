#include "galinv/exact/matrix.hpp"

namespace galinv {

MatrixCR dagger(const MatrixCR& m) {
  MatrixCR d(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d(c, r) = m(r, c).conj();
  }
  return d;
}

ComplexRational trace(const MatrixCR& m) {
  if (!m.is_square()) throw DimensionError("trace of non-square matrix");
  ComplexRational t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

MatrixCR kron(const MatrixCR& a, const MatrixCR& b) {
  MatrixCR out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

MatrixCR from_blocks(const MatrixCR& a, const MatrixCR& b, const MatrixCR& c, const MatrixCR& d) {
  const std::size_t n = a.rows();
  for (const MatrixCR* blk : {&a, &b, &c, &d}) {
    if (blk->rows() != n || blk->cols() != n) throw DimensionError("from_blocks needs equal square blocks");
  }
  MatrixCR out(2 * n, 2 * n);
  out.set_block(0, 0, a);
  out.set_block(0, n, b);
  out.set_block(n, 0, c);
  out.set_block(n, n, d);
  return out;
}

MatrixCR evaluate(const MatrixVP& m, const std::array<ComplexRational, 3>& v) {
  return m.map([&](const VPoly& p) { return p.evaluate(v); });
}

std::string to_string(const MatrixCR& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).to_string();
  }
  os << "]";
  return os.str();
}

}  // namespace galinv
