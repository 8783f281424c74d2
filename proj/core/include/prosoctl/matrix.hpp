#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace prosoctl {

// Dense row-major matrix of doubles. Rows index time steps (phones/frames),
// columns index features.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill_value = 0.0)
      : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill_value) {}

  double& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  double* row(int r) { return data.data() + static_cast<size_t>(r) * cols; }
  const double* row(int r) const { return data.data() + static_cast<size_t>(r) * cols; }

  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
  void fill(double v) { std::fill(data.begin(), data.end(), v); }
  size_t size() const { return data.size(); }
};

}  // namespace prosoctl
