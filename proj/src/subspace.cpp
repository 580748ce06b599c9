#include "g2grad/subspace.hpp"

#include <stdexcept>

namespace g2grad {

Subspace Subspace::zero(size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::span(size_t ambient_dim, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw std::invalid_argument("spanning vector has wrong dimension");
  Subspace s;
  s.ambient_ = ambient_dim;
  Matrix m(vectors.size(), ambient_dim);
  for (size_t i = 0; i < vectors.size(); ++i)
    for (size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
  s.basis_ = rref(m);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("vector has wrong dimension");
  // Reduce v against the echelon basis; pivot columns are strictly
  // increasing, so one pass suffices.
  std::vector<size_t> pivots;
  Vec rem = v;
  Vec coeffs(basis_.rows(), Cyc::zero());
  for (size_t i = 0; i < basis_.rows(); ++i) {
    size_t p = 0;
    while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
    const Cyc c = rem[p];  // pivot entry of basis row i is 1
    if (c.is_zero()) continue;
    coeffs[i] = c;
    for (size_t j = p; j < ambient_; ++j) rem[j] -= c * basis_.at(i, j);
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return coeffs;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("ambient dimension mismatch");
  Subspace s;
  s.ambient_ = ambient_;
  s.basis_ = rref(vstack(basis_, other.basis_));
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("ambient dimension mismatch");
  // The intersection is the joint kernel of both annihilators.
  const Matrix ann = vstack(annihilator(), other.annihilator());
  Subspace s;
  s.ambient_ = ambient_;
  s.basis_ = rref(Matrix::from_rows(nullspace(ann)));
  if (s.basis_.rows() == 0) s.basis_ = Matrix(0, ambient_);
  return s;
}

Matrix Subspace::annihilator() const {
  const auto kernel = nullspace(basis_.rows() ? basis_ : Matrix(0, ambient_));
  Matrix out = rref(Matrix::from_rows(kernel));
  if (out.rows() == 0) out = Matrix(0, ambient_);
  return out;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
  if (a.basis_.rows() != b.basis_.rows())
    return a.basis_.rows() < b.basis_.rows();
  for (size_t i = 0; i < a.basis_.rows(); ++i)
    for (size_t j = 0; j < a.ambient_; ++j) {
      if (a.basis_.at(i, j) == b.basis_.at(i, j)) continue;
      return a.basis_.at(i, j) < b.basis_.at(i, j);
    }
  return false;
}

}  // namespace g2grad
