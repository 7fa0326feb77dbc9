#pragma once

#include <optional>
#include <vector>

#include "pdeform/rational.hpp"

namespace pdeform {

// Dense exact matrix over Q. Row-major.
class QMatrix {
  public:
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Fraction-free (Bareiss) row echelon over the integers after clearing
// denominators rowwise. Pivots are chosen deterministically: columns in
// increasing order, first row with a nonzero entry.
struct Echelon {
    std::vector<std::vector<Integer>> m;
    std::vector<std::size_t> pivot_cols;  // one per pivot row, increasing
    std::size_t cols = 0;

    std::size_t rank() const { return pivot_cols.size(); }
};

Echelon echelonize(const QMatrix& a);

// Particular solution of A x = b with all free variables set to zero;
// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const QMatrix& a, const std::vector<Rational>& b);

// Basis of the right nullspace of A.
std::vector<std::vector<Rational>> nullspace(const QMatrix& a);

std::size_t matrix_rank(const QMatrix& a);

}  // namespace pdeform
