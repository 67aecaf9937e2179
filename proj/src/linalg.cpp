#include "klpath/linalg.hpp"

#include <stdexcept>

namespace klpath {

int QMatrix::rank() const {
  std::vector<mpq_class> m = a_;
  auto at = [&](int r, int c) -> mpq_class& { return m[size_t(r) * cols_ + c]; };
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
    mpq_class inv = 1 / at(rank, col);
    for (int c = col; c < cols_; ++c) at(rank, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || at(r, col) == 0) continue;
      mpq_class f = at(r, col);
      for (int c = col; c < cols_; ++c) at(r, c) -= f * at(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<mpq_class>> QMatrix::solve(std::vector<mpq_class> b) const {
  if (rows_ != cols_ || static_cast<int>(b.size()) != rows_)
    throw std::invalid_argument("QMatrix::solve: shape mismatch");
  std::vector<mpq_class> m = a_;
  auto at = [&](int r, int c) -> mpq_class& { return m[size_t(r) * cols_ + c]; };
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(col, c));
      std::swap(b[pivot], b[col]);
    }
    mpq_class inv = 1 / at(col, col);
    for (int c = col; c < cols_; ++c) at(col, c) *= inv;
    b[col] *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == col || at(r, col) == 0) continue;
      mpq_class f = at(r, col);
      for (int c = col; c < cols_; ++c) at(r, c) -= f * at(col, c);
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace klpath
