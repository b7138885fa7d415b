#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace hopgraph {

/// Dense row-major matrix of doubles. Small graphs only (a few dozen nodes).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix square(std::size_t n, double fill = 0.0) { return Matrix(n, n, fill); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  Matrix& operator+=(const Matrix& other) {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }
  Matrix& operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline Matrix operator*(double s, Matrix m) {
  m *= s;
  return m;
}

/// (G + G^T) / 2. Leaves an already-symmetric matrix unchanged.
inline Matrix symmetrized(const Matrix& g) {
  assert(g.rows() == g.cols());
  Matrix out = Matrix::square(g.rows());
  for (std::size_t j = 0; j < g.rows(); ++j) {
    out(j, j) = g(j, j);
    for (std::size_t k = j + 1; k < g.cols(); ++k) {
      const double v = 0.5 * (g(j, k) + g(k, j));
      out(j, k) = v;
      out(k, j) = v;
    }
  }
  return out;
}

}  // namespace hopgraph
