#pragma once

#include <optional>
#include <vector>

#include "superds/rational.hpp"

namespace superds {

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(size_t n);
  static Matrix from_columns(size_t rows, const std::vector<RVec>& cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  RVec column(size_t j) const;
  RVec apply(const RVec& v) const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& s) const;
  bool operator==(const Matrix& o) const = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  RVec a_;
};

struct RowEchelon {
  Matrix r;                   // reduced row echelon form
  std::vector<size_t> pivots; // pivot column per nonzero row
};

RowEchelon rref(Matrix m);
size_t rank(const Matrix& m);
// Basis of the null space, one vector per free column.
std::vector<RVec> kernel(const Matrix& m);
// Linearly independent subset of `vecs` (greedy, in order) spanning the same space.
std::vector<size_t> independent_subset(const std::vector<RVec>& vecs);
// x with m x = b, or nullopt.
std::optional<RVec> solve(const Matrix& m, const RVec& b);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace superds
