#include "g2grad/derivations.hpp"

#include <stdexcept>

namespace g2grad {

Vec flatten(const Matrix& m) {
  Vec out;
  out.reserve(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

Matrix unflatten(const Vec& v, size_t rows, size_t cols) {
  if (v.size() != rows * cols)
    throw std::invalid_argument("flattened size mismatch");
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
  return m;
}

Matrix left_mult_matrix(const Oct& x) {
  Matrix m(kOctDim, kOctDim);
  for (int j = 0; j < kOctDim; ++j) {
    const Oct col = oct_mul(x, Oct::basis(j));
    for (int i = 0; i < kOctDim; ++i) m.at(i, j) = col.c[i];
  }
  return m;
}

Matrix right_mult_matrix(const Oct& x) {
  Matrix m(kOctDim, kOctDim);
  for (int j = 0; j < kOctDim; ++j) {
    const Oct col = oct_mul(Oct::basis(j), x);
    for (int i = 0; i < kOctDim; ++i) m.at(i, j) = col.c[i];
  }
  return m;
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

Oct apply(const Matrix& f, const Oct& x) {
  return oct_from_vec(mat_vec(f, oct_to_vec(x)));
}

}  // namespace

bool is_derivation(const Matrix& f) {
  if (f.rows() != kOctDim || f.cols() != kOctDim)
    throw std::invalid_argument("derivation candidate must be 8x8");
  for (int i = 0; i < kOctDim; ++i)
    for (int j = 0; j < kOctDim; ++j) {
      const Oct a = Oct::basis(i);
      const Oct b = Oct::basis(j);
      const Oct lhs = apply(f, oct_mul(a, b));
      const Oct rhs = oct_mul(apply(f, a), b) + oct_mul(a, apply(f, b));
      if (lhs != rhs) return false;
    }
  return true;
}

Matrix inner_derivation(const Oct& x, const Oct& y) {
  const Matrix lx = left_mult_matrix(x);
  const Matrix ly = left_mult_matrix(y);
  const Matrix rx = right_mult_matrix(x);
  const Matrix ry = right_mult_matrix(y);
  return bracket(lx, ly) + bracket(lx, ry) + bracket(rx, ry);
}

Matrix unit3(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2)
    throw std::invalid_argument("unit3 index out of range");
  Matrix m(3, 3);
  m.at(i, j) = Cyc::one();
  return m;
}

Matrix sl3_derivation(const Matrix& t) {
  if (t.rows() != 3 || t.cols() != 3)
    throw std::invalid_argument("sl3 parameter must be 3x3");
  if (!t.trace().is_zero())
    throw std::invalid_argument("sl3 parameter must be traceless");
  Matrix m(kOctDim, kOctDim);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      // d(u_b) = sum_j t[b][j] u_j and d(v_b) = -sum_j t[j][b] v_j.
      m.at(kU1 + a, kU1 + b) = t.at(b, a);
      m.at(kV1 + a, kV1 + b) = -t.at(a, b);
    }
  return m;
}

DerivationBasis::DerivationBasis() {
  // Leibniz condition as a homogeneous linear system in the 64 entries of
  // an 8x8 matrix D (flattened row-major): for every basis pair (i,j) and
  // output coordinate m,
  //   sum_k S(i,j)_k D[m][k] - sum_k S(k,j)_m D[k][i]
  //                          - sum_k S(i,k)_m D[k][j] = 0,
  // where S are the structure constants.
  Matrix system(kOctDim * kOctDim * kOctDim, kOctDim * kOctDim);
  size_t eq = 0;
  for (int i = 0; i < kOctDim; ++i)
    for (int j = 0; j < kOctDim; ++j) {
      int sign = 0;
      const int prod = table_product(i, j, &sign);
      for (int m = 0; m < kOctDim; ++m, ++eq) {
        if (prod >= 0)
          system.at(eq, kOctDim * m + prod) += Cyc(sign);
        for (int k = 0; k < kOctDim; ++k) {
          int s1 = 0;
          if (table_product(k, j, &s1) == m && s1 != 0)
            system.at(eq, kOctDim * k + i) -= Cyc(s1);
          int s2 = 0;
          if (table_product(i, k, &s2) == m && s2 != 0)
            system.at(eq, kOctDim * k + j) -= Cyc(s2);
        }
      }
    }

  span_ = Subspace::span(kOctDim * kOctDim, nullspace(system));
  if (span_.dim() != kDerDim)
    throw std::logic_error("derivation space has unexpected dimension " +
                           std::to_string(span_.dim()));
  for (const auto& row : span_.basis_vectors()) {
    Matrix d = unflatten(row, kOctDim, kOctDim);
    if (!is_derivation(d))
      throw std::logic_error("Leibniz nullspace produced a non-derivation");
    elements_.push_back(std::move(d));
  }
}

Vec DerivationBasis::coordinates(const Matrix& d) const {
  if (d.rows() != kOctDim || d.cols() != kOctDim)
    throw std::invalid_argument("derivation must be 8x8");
  auto coeffs = span_.coordinates(flatten(d));
  if (!coeffs)
    throw std::invalid_argument("matrix is not a derivation of the algebra");
  return *coeffs;
}

Matrix DerivationBasis::from_coordinates(const Vec& coeffs) const {
  if (coeffs.size() != elements_.size())
    throw std::invalid_argument("coefficient count mismatch");
  Matrix out(kOctDim, kOctDim);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    out += coeffs[k] * elements_[k];
  }
  return out;
}

const DerivationBasis& derivation_space() {
  static const DerivationBasis basis;
  return basis;
}

SpanReport span_check() {
  std::vector<Vec> sl3_rows;
  const Matrix diag1 = unit3(0, 0) - unit3(1, 1);
  const Matrix diag2 = unit3(1, 1) - unit3(2, 2);
  sl3_rows.push_back(flatten(sl3_derivation(diag1)));
  sl3_rows.push_back(flatten(sl3_derivation(diag2)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) sl3_rows.push_back(flatten(sl3_derivation(unit3(i, j))));

  std::vector<Vec> e1u_rows;
  for (int i = 0; i < 3; ++i)
    e1u_rows.push_back(
        flatten(inner_derivation(Oct::basis(kE1), Oct::basis(kU1 + i))));
  std::vector<Vec> e2v_rows;
  for (int i = 0; i < 3; ++i)
    e2v_rows.push_back(
        flatten(inner_derivation(Oct::basis(kE2), Oct::basis(kV1 + i))));

  const size_t ambient = kOctDim * kOctDim;
  const Subspace sl3 = Subspace::span(ambient, sl3_rows);
  const Subspace e1u = Subspace::span(ambient, e1u_rows);
  std::vector<Vec> all = sl3_rows;
  all.insert(all.end(), e1u_rows.begin(), e1u_rows.end());
  all.insert(all.end(), e2v_rows.begin(), e2v_rows.end());
  const Subspace combined = Subspace::span(ambient, all);

  SpanReport report;
  report.sl3_dim = sl3.dim();
  report.inner_e1u_dim = e1u.dim();
  report.combined_dim = combined.dim();
  report.equals_derivation_space = combined == derivation_space().span();
  report.ok = report.sl3_dim == 8 && report.inner_e1u_dim == 3 &&
              report.combined_dim == kDerDim && report.equals_derivation_space;
  return report;
}

Matrix killing_form() {
  const DerivationBasis& basis = derivation_space();
  const size_t n = basis.dim();
  // ad matrices in the canonical coordinates.
  std::vector<Matrix> ad;
  ad.reserve(n);
  for (size_t a = 0; a < n; ++a) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; ++k) {
      const Vec col =
          basis.coordinates(bracket(basis.elements()[a], basis.elements()[k]));
      for (size_t r = 0; r < n; ++r) m.at(r, k) = col[r];
    }
    ad.push_back(std::move(m));
  }
  Matrix gram(n, n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      const Cyc value = (ad[a] * ad[b]).trace();
      gram.at(a, b) = value;
      gram.at(b, a) = value;
    }
  return gram;
}

}  // namespace g2grad
