#include "superds/linalg.hpp"

#include <utility>

#include "superds/error.hpp"

namespace superds {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(size_t rows, const std::vector<RVec>& cols) {
  Matrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows)
      throw Error(ErrorKind::DimensionMismatch, "column length");
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RVec Matrix::column(size_t j) const {
  RVec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RVec Matrix::apply(const RVec& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "apply");
  RVec out(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  Matrix m(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        if (sgn(o(k, j)) != 0) m(i, j) += x * o(k, j);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  Matrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-1); }

Matrix Matrix::scaled(const Rational& s) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      Rational f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.r = std::move(m);
  return out;
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<RVec> kernel(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RVec> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RVec v(m.cols());
    v[f] = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.r(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<size_t> independent_subset(const std::vector<RVec>& vecs) {
  if (vecs.empty()) return {};
  Matrix m = Matrix::from_columns(vecs[0].size(), vecs);
  return rref(m).pivots;
}

std::optional<RVec> solve(const Matrix& m, const RVec& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve");
  Matrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RVec x(m.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.r(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.r(i, n + j);
  return inv;
}

}  // namespace superds
