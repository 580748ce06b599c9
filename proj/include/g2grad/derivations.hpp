#pragma once

#include "g2grad/octonion.hpp"
#include "g2grad/subspace.hpp"

namespace g2grad {

inline constexpr size_t kDerDim = 14;

/// Row-major flattening of a matrix into a single coordinate vector.
Vec flatten(const Matrix& m);
Matrix unflatten(const Vec& v, size_t rows, size_t cols);

/// Column-coordinate matrix of y -> x*y on the octonion basis.
Matrix left_mult_matrix(const Oct& x);
/// Column-coordinate matrix of y -> y*x.
Matrix right_mult_matrix(const Oct& x);

Matrix bracket(const Matrix& a, const Matrix& b);

/// Exact Leibniz check of an 8x8 map against all 64 basis products.
bool is_derivation(const Matrix& f);

/// D(x,y) = [L_x,L_y] + [L_x,R_y] + [R_x,R_y]; always a derivation.
Matrix inner_derivation(const Oct& x, const Oct& y);

/// 3x3 unit matrix E(i,j), for assembling traceless parameters.
Matrix unit3(int i, int j);

/// The derivation attached to a traceless 3x3 matrix t: kills e1 and e2,
/// sends u to u*t (row action) and v to -v*t^T. Throws
/// std::invalid_argument when t is not 3x3 traceless.
Matrix sl3_derivation(const Matrix& t);

/// Canonical basis of Der(C), the nullspace of the Leibniz system over all
/// basis pairs. Cached; dimension 14.
class DerivationBasis {
 public:
  size_t dim() const { return elements_.size(); }
  /// Basis derivations as 8x8 matrices, matching span().basis() rows.
  const std::vector<Matrix>& elements() const { return elements_; }
  /// The 14-dimensional span inside the 64-dimensional matrix coordinates.
  const Subspace& span() const { return span_; }

  /// Coefficients of a derivation in the canonical basis; throws
  /// std::invalid_argument when the matrix lies outside Der(C).
  Vec coordinates(const Matrix& d) const;
  Matrix from_coordinates(const Vec& coeffs) const;

 private:
  friend const DerivationBasis& derivation_space();
  DerivationBasis();

  std::vector<Matrix> elements_;
  Subspace span_;
};

const DerivationBasis& derivation_space();

struct SpanReport {
  bool ok = true;
  size_t combined_dim = 0;
  size_t sl3_dim = 0;
  size_t inner_e1u_dim = 0;
  bool equals_derivation_space = false;
};

/// Dimension audit of the classical spanning set: the 8 sl3 derivations
/// plus the inner derivations D(e1,u_i) and D(e2,v_i).
SpanReport span_check();

/// Gram matrix of the Killing form trace(ad a * ad b) on the canonical
/// basis; nondegenerate (semisimplicity witness).
Matrix killing_form();

}  // namespace g2grad
