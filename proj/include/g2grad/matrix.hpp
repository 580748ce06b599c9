#pragma once

#include <cstddef>
#include <vector>

#include "g2grad/cyclotomic.hpp"

namespace g2grad {

using Vec = std::vector<Cyc>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Cyc& c, const Vec& v);
Cyc vec_dot(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& v);

/// Dense row-major matrix over the cyclotomic scalars.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Cyc& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Cyc& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Vec row(size_t i) const;
  std::vector<Vec> row_list() const;

  Matrix transpose() const;
  bool is_zero() const;
  Cyc trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Cyc& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

  /// Determinant by exact Gaussian elimination; square matrices only.
  Cyc det() const;
  /// Inverse by Gauss-Jordan; throws std::domain_error when singular.
  Matrix inverse() const;

 private:
  size_t rows_, cols_;
  std::vector<Cyc> data_;
};

/// Matrix times column vector.
Vec mat_vec(const Matrix& m, const Vec& v);

/// Reduced row echelon form with zero rows dropped, so equal row spaces
/// yield identical matrices. Optionally reports the pivot columns.
Matrix rref(const Matrix& m, std::vector<size_t>* pivot_cols = nullptr);

size_t rank(const Matrix& m);

/// Basis of the right nullspace {v : m v = 0}, one vector per non-pivot
/// column, in column order; each has a 1 in its free coordinate.
std::vector<Vec> nullspace(const Matrix& m);

/// Stacks b's rows under a's; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace g2grad
