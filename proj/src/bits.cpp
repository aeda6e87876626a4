#include "otsfc/bits.hpp"

namespace otsfc {

BitMatrix xor_matrices(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("xor_matrices requires equal shapes");
  BitMatrix out(a.rows(), a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j)
      out.set(i, j, a.at(i, j) ^ b.at(i, j));
  return out;
}

BitString column(const BitMatrix& matrix, std::size_t j) {
  if (j < 1 || j > matrix.cols()) throw IndexError("column index out of range");
  BitString out(matrix.rows());
  for (std::size_t i = 1; i <= matrix.rows(); ++i)
    out.set(i - 1, matrix.at(i, j));
  return out;
}

}  // namespace otsfc
