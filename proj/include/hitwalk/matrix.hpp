#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace hitwalk {

// Dense row-major matrix of doubles. Targets stay at desk scale (n <= ~2000)
// and everything downstream is a dense O(n^3) solve, so no sparse storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const std::vector<double>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, const std::vector<double>& x);
Matrix transpose(const Matrix& a);

// Removes row k and column k.
Matrix drop_index(const Matrix& a, int k);

double max_abs_diff(const Matrix& a, const Matrix& b);
double inf_norm(const std::vector<double>& v);
double dot(const std::vector<double>& a, const std::vector<double>& b);

// Relative comparison with an absolute floor of 1; the default 1e-9 is the
// tolerance used for all weight-refinement comparisons.
inline bool approx_equal(double x, double y, double rel = 1e-9) {
  return std::abs(x - y) <= rel * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace hitwalk
