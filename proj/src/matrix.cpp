#include "g2grad/matrix.hpp"

#include <stdexcept>

namespace g2grad {

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Cyc& c, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Cyc vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Cyc out;
  for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyc::one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw std::invalid_argument("ragged rows");
    for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(size_t i) const {
  return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& c : data_)
    if (!c.is_zero()) return false;
  return true;
}

Cyc Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Cyc t;
  for (size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Cyc& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

Matrix operator*(const Cyc& c, Matrix m) {
  for (auto& x : m.data_) x *= c;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("shape mismatch");
  Vec out(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += m.at(i, j) * v[j];
    }
  return out;
}

Cyc Matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  Matrix work = *this;
  Cyc result = Cyc::one();
  for (size_t col = 0; col < cols_; ++col) {
    size_t pivot = col;
    while (pivot < rows_ && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) return Cyc::zero();
    if (pivot != col) {
      for (size_t j = 0; j < cols_; ++j)
        std::swap(work.at(pivot, j), work.at(col, j));
      result = -result;
    }
    const Cyc p = work.at(col, col);
    result *= p;
    const Cyc pinv = p.inverse();
    for (size_t i = col + 1; i < rows_; ++i) {
      const Cyc factor = work.at(i, col) * pinv;
      if (factor.is_zero()) continue;
      for (size_t j = col; j < cols_; ++j)
        work.at(i, j) -= factor * work.at(col, j);
    }
  }
  return result;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  Matrix work = *this;
  Matrix inv = identity(rows_);
  for (size_t col = 0; col < cols_; ++col) {
    size_t pivot = col;
    while (pivot < rows_ && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) throw std::domain_error("matrix is singular");
    if (pivot != col)
      for (size_t j = 0; j < cols_; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const Cyc pinv = work.at(col, col).inverse();
    for (size_t j = 0; j < cols_; ++j) {
      work.at(col, j) *= pinv;
      inv.at(col, j) *= pinv;
    }
    for (size_t i = 0; i < rows_; ++i) {
      if (i == col) continue;
      const Cyc factor = work.at(i, col);
      if (factor.is_zero()) continue;
      for (size_t j = 0; j < cols_; ++j) {
        work.at(i, j) -= factor * work.at(col, j);
        inv.at(i, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

Matrix rref(const Matrix& m, std::vector<size_t>* pivot_cols) {
  Matrix work = m;
  if (pivot_cols) pivot_cols->clear();
  size_t lead = 0;
  std::vector<size_t> pivots;
  for (size_t col = 0; col < work.cols() && lead < work.rows(); ++col) {
    size_t pivot = lead;
    while (pivot < work.rows() && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == work.rows()) continue;
    if (pivot != lead)
      for (size_t j = 0; j < work.cols(); ++j)
        std::swap(work.at(pivot, j), work.at(lead, j));
    const Cyc pinv = work.at(lead, col).inverse();
    for (size_t j = col; j < work.cols(); ++j) work.at(lead, j) *= pinv;
    for (size_t i = 0; i < work.rows(); ++i) {
      if (i == lead) continue;
      const Cyc factor = work.at(i, col);
      if (factor.is_zero()) continue;
      for (size_t j = col; j < work.cols(); ++j)
        work.at(i, j) -= factor * work.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix out(pivots.size(), work.cols());
  for (size_t i = 0; i < pivots.size(); ++i)
    for (size_t j = 0; j < work.cols(); ++j) out.at(i, j) = work.at(i, j);
  if (pivot_cols) *pivot_cols = pivots;
  return out;
}

size_t rank(const Matrix& m) { return rref(m).rows(); }

std::vector<Vec> nullspace(const Matrix& m) {
  std::vector<size_t> pivots;
  const Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Cyc::zero());
    v[free] = Cyc::one();
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("column count mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

}  // namespace g2grad
