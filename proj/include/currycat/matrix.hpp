#pragma once

// Dense matrices over Q, acting on column vectors from the left. Sizes stay
// in the low hundreds, so a plain row-major vector with zero-skipping
// multiplication is plenty.

#include <cassert>
#include <cstddef>
#include <vector>

#include "currycat/rational.hpp"

namespace currycat {

using Vec = std::vector<Rational>;

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat zero(std::size_t r, std::size_t c) { return Mat(r, c); }
  static Mat scalar(std::size_t n, const Rational& c) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Rational& y = o(k, j);
          if (y != 0) r(i, j) += x * y;
        }
      }
    return r;
  }
  Mat operator*(const Rational& c) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
  }
  Vec operator*(const Vec& v) const {
    assert(v.size() == cols_);
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
  }
  bool is_scalar(const Rational& c) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? c : Rational(0))) return false;
    return true;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  // Row reduction to reduced echelon form; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = rows_;
      for (std::size_t i = row; i < rows_; ++i)
        if ((*this)(i, col) != 0) {
          sel = i;
          break;
        }
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t j = 0; j < cols_; ++j)
          std::swap((*this)(sel, j), (*this)(row, j));
      Rational inv = Rational(1) / (*this)(row, col);
      for (std::size_t j = 0; j < cols_; ++j) (*this)(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row) continue;
        Rational f = (*this)(i, col);
        if (f == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j)
          (*this)(i, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Mat copy = *this;
    return copy.rref().size();
  }

  // Basis of the right nullspace (columns as vectors).
  std::vector<Vec> nullspace() const {
    Mat copy = *this;
    auto pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      Vec v(cols_);
      v[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = -copy(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Inverse; asserts the matrix is square and invertible.
  Mat inverse() const {
    assert(rows_ == cols_);
    Mat aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = 1;
    }
    auto pivots = aug.rref();
    assert(pivots.size() == rows_);
    Mat inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

inline Mat operator*(const Rational& c, const Mat& m) { return m * c; }

}  // namespace currycat
