#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "klpath/rational.hpp"

namespace klpath {

// Dense matrix over arbitrary-precision rationals. Entry growth during
// elimination is unbounded for exact arithmetic, hence GMP rather than
// fixed-width rationals.
class QMatrix {
public:
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const mpq_class& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  void set(int r, int c, Int v) { at(r, c) = static_cast<long>(v); }
  void set(int r, int c, const Rat& v) {
    at(r, c) = mpq_class(static_cast<long>(v.num()), static_cast<long>(v.den()));
  }

  int rank() const;

  // Solve A x = b for square nonsingular A; nullopt if singular.
  std::optional<std::vector<mpq_class>> solve(std::vector<mpq_class> b) const;

private:
  int rows_, cols_;
  std::vector<mpq_class> a_;
};

}  // namespace klpath
