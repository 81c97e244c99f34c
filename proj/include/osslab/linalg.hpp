#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "osslab/errors.hpp"

namespace osslab {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& v);

/// v / ||v||; throws ZeroVector when the norm vanishes.
Vec normalized(const Vec& v);

/// Dense row-major matrix. Everything here is sized for small operator
/// work (dimensions up to 8), so no attempt at blocking or sparsity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  static Matrix identity(int n);

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::span<const double> data() const { return a_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

Vec operator*(const Matrix& m, const Vec& v);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

/// Max absolute entry.
double max_abs(const Matrix& m);
double max_abs(const Vec& v);

/// Largest |m(i,j) - m(j,i)|.
double max_asymmetry(const Matrix& m);

/// (m + m^T)/2 with both mirror slots assigned the same double, so the
/// result is bitwise symmetric.
Matrix symmetrized(const Matrix& m);

/// Column j of m as a vector.
Vec column(const Matrix& m, int j);

}  // namespace osslab
