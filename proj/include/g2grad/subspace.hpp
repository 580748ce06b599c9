#pragma once

#include <optional>

#include "g2grad/matrix.hpp"

namespace g2grad {

/// Subspace of a fixed-dimension coordinate space, held as the reduced row
/// echelon basis of its spanning set. The RREF basis is a canonical form, so
/// operator== decides subspace equality and Subspace works as a map value.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  static Subspace zero(size_t ambient_dim);
  static Subspace full(size_t ambient_dim);
  /// Span of arbitrary vectors; zero vectors are dropped.
  static Subspace span(size_t ambient_dim, const std::vector<Vec>& vectors);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// Canonical basis, one vector per row.
  const Matrix& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const { return basis_.row_list(); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the canonical basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Basis of {f : f(v) = 0 for all v here}, as row vectors of functionals
  /// in the dual coordinates; dim + annihilator dim = ambient dim.
  Matrix annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }
  /// Lexicographic on the canonical form; only for ordered containers.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  size_t ambient_;
  Matrix basis_;  // RREF, no zero rows
};

}  // namespace g2grad
