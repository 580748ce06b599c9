#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <random>
#include <vector>

#include "g2grad/derivations.hpp"
#include "g2grad/octonion.hpp"

using namespace g2grad;

namespace {

// The Leibniz constraint system rebuilt from scratch over plain integers:
// one row per (i, j, m) demanding coordinate m of D(b_i b_j) equal that of
// D(b_i) b_j + b_i D(b_j), unknowns D[r][c] flattened row-major.
std::vector<std::vector<mpz_class>> leibniz_system_int() {
  int s[8][8][8] = {};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Oct p = oct_mul(Oct::basis(i), Oct::basis(j));
      for (int k = 0; k < 8; ++k) {
        REQUIRE(p.c[k].is_rational());
        s[i][j][k] = static_cast<int>(p.c[k].rational_value().get_num().get_si());
      }
    }

  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(512);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int m = 0; m < 8; ++m) {
        std::vector<mpz_class> row(64, mpz_class(0));
        for (int k = 0; k < 8; ++k) row[8 * m + k] += s[i][j][k];
        for (int r = 0; r < 8; ++r) {
          row[8 * r + i] -= s[r][j][m];
          row[8 * r + j] -= s[i][r][m];
        }
        rows.push_back(std::move(row));
      }
  return rows;
}

// Fraction-free Bareiss elimination; rank only, exact integer arithmetic
// throughout, so this shares nothing with the library's rational rref.
size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  mpz_class prev(1);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        mpz_class t = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

Matrix random_traceless(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  Matrix t(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.at(i, j) = Cyc(coeff(rng));
  // Push the trace into the last diagonal slot to kill it.
  t.at(2, 2) -= t.trace();
  return t;
}

Matrix random_derivation(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto& basis = derivation_space().elements();
  Matrix d(8, 8);
  for (const auto& b : basis) d += Cyc(coeff(rng)) * b;
  return d;
}

}  // namespace

TEST_CASE("is_derivation on known maps") {
  CHECK(is_derivation(Matrix(8, 8)));
  CHECK_FALSE(is_derivation(Matrix::identity(8)));  // fails on 1*1 already
  CHECK(is_derivation(inner_derivation(Oct::basis(kE1), Oct::basis(kU1))));
}

TEST_CASE("derivation space has dimension 14 by an independent rank oracle") {
  const auto system = leibniz_system_int();
  REQUIRE(system.size() == 512);
  const size_t r = bareiss_rank(system);
  CHECK(r == 50);
  CHECK(64 - r == kDerDim);
  CHECK(derivation_space().dim() == kDerDim);
}

TEST_CASE("every canonical basis element is a derivation") {
  for (const auto& d : derivation_space().elements()) {
    REQUIRE(is_derivation(d));
    REQUIRE_FALSE(d.is_zero());
  }
}

TEST_CASE("inner derivations") {
  std::mt19937 rng(101010u);
  std::uniform_int_distribution<int> pick(0, 7);
  for (int trial = 0; trial < 20; ++trial) {
    const Oct x = Oct::basis(pick(rng)), y = Oct::basis(pick(rng));
    REQUIRE(is_derivation(inner_derivation(x, y)));
  }
  // Left/right multiplication by the identity commutes with everything.
  CHECK(inner_derivation(Oct::one(), Oct::basis(kU2)).is_zero());
  CHECK_FALSE(inner_derivation(Oct::basis(kE1), Oct::basis(kU1)).is_zero());
  CHECK(is_derivation(inner_derivation(Oct::basis(kU1), Oct::basis(kU1))));
}

TEST_CASE("sl3 derivation action for E11 - E22") {
  const Matrix d = sl3_derivation(unit3(0, 0) - unit3(1, 1));
  REQUIRE(is_derivation(d));

  auto image = [&](int i) { return mat_vec(d, oct_to_vec(Oct::basis(i))); };
  CHECK(vec_is_zero(image(kE1)));
  CHECK(vec_is_zero(image(kE2)));
  CHECK(image(kU1) == oct_to_vec(Oct::basis(kU1)));
  CHECK(image(kU2) == oct_to_vec(-Oct::basis(kU2)));
  CHECK(vec_is_zero(image(kU3)));
  CHECK(image(kV1) == oct_to_vec(-Oct::basis(kV1)));
  CHECK(image(kV2) == oct_to_vec(Oct::basis(kV2)));
  CHECK(vec_is_zero(image(kV3)));
}

TEST_CASE("sl3 derivation rejects bad parameters") {
  CHECK_THROWS_AS(sl3_derivation(Matrix::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(sl3_derivation(Matrix(2, 2)), std::invalid_argument);
  CHECK(sl3_derivation(Matrix(3, 3)).is_zero());
}

TEST_CASE("T to d_T is linear and spans dimension 8") {
  std::mt19937 rng(202020u);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix t = random_traceless(rng), s = random_traceless(rng);
    REQUIRE(sl3_derivation(t + s) == sl3_derivation(t) + sl3_derivation(s));
    REQUIRE(sl3_derivation(Cyc(3) * t) == Cyc(3) * sl3_derivation(t));
  }

  // The eight unit-matrix generators of traceless 3x3: six off-diagonal
  // E_ij plus two diagonal differences.
  std::vector<Vec> flats;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) flats.push_back(flatten(sl3_derivation(unit3(i, j))));
  flats.push_back(flatten(sl3_derivation(unit3(0, 0) - unit3(1, 1))));
  flats.push_back(flatten(sl3_derivation(unit3(1, 1) - unit3(2, 2))));
  CHECK(Subspace::span(64, flats).dim() == 8);
}

TEST_CASE("bracket of sl3 derivations reverses the commutator") {
  // The sign is fixed once by this exhaustive sweep over unit generators
  // and then asserted on random traceless pairs.
  std::vector<Matrix> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) gens.push_back(unit3(i, j));
  gens.push_back(unit3(0, 0) - unit3(1, 1));
  gens.push_back(unit3(1, 1) - unit3(2, 2));

  for (const auto& t : gens)
    for (const auto& s : gens) {
      const Matrix lhs = bracket(sl3_derivation(t), sl3_derivation(s));
      const Matrix commutator = t * s - s * t;
      REQUIRE(lhs == sl3_derivation(Cyc(-1) * commutator));
    }

  std::mt19937 rng(303030u);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix t = random_traceless(rng), s = random_traceless(rng);
    const Matrix commutator = t * s - s * t;
    REQUIRE(bracket(sl3_derivation(t), sl3_derivation(s)) ==
            sl3_derivation(Cyc(-1) * commutator));
  }
}

TEST_CASE("bracket closure and membership") {
  const auto& space = derivation_space();
  const auto& basis = space.elements();
  for (size_t i = 0; i < basis.size(); ++i) {
    CHECK(bracket(basis[i], basis[i]).is_zero());
    for (size_t j = i + 1; j < basis.size(); ++j) {
      const Matrix br = bracket(basis[i], basis[j]);
      REQUIRE(is_derivation(br));
      REQUIRE(space.span().contains(flatten(br)));
    }
  }
}

TEST_CASE("Jacobi identity on random derivations") {
  std::mt19937 rng(404040u);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix a = random_derivation(rng);
    const Matrix b = random_derivation(rng);
    const Matrix c = random_derivation(rng);
    const Matrix j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                     bracket(c, bracket(a, b));
    REQUIRE(j.is_zero());
  }
}

TEST_CASE("coordinates round trip in the canonical basis") {
  std::mt19937 rng(505050u);
  const auto& space = derivation_space();
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix d = random_derivation(rng);
    const Vec coords = space.coordinates(d);
    REQUIRE(coords.size() == kDerDim);
    REQUIRE(space.from_coordinates(coords) == d);
  }
  CHECK_THROWS_AS(space.coordinates(Matrix::identity(8)),
                  std::invalid_argument);
}

TEST_CASE("classical spanning set audit") {
  const SpanReport r = span_check();
  CHECK(r.ok);
  CHECK(r.combined_dim == 14);
  CHECK(r.sl3_dim == 8);
  CHECK(r.inner_e1u_dim == 3);
  CHECK(r.equals_derivation_space);
}

TEST_CASE("derivations preserve the trace-zero hyperplane") {
  // The 7-dimensional complement of the identity: e1 - e2 and the u, v.
  std::vector<Vec> zero_trace = {oct_to_vec(Oct::basis(kE1)) };
  zero_trace[0] = oct_to_vec(Oct::basis(kE1) - Oct::basis(kE2));
  for (int i = kU1; i <= kV3; ++i) zero_trace.push_back(oct_to_vec(Oct::basis(i)));
  const Subspace c0 = Subspace::span(8, zero_trace);
  REQUIRE(c0.dim() == 7);

  for (const auto& d : derivation_space().elements())
    for (const Vec& x : c0.basis_vectors())
      REQUIRE(c0.contains(mat_vec(d, x)));
}

TEST_CASE("Killing form is symmetric and nondegenerate") {
  const Matrix k = killing_form();
  REQUIRE(k.rows() == kDerDim);
  REQUIRE(k.cols() == kDerDim);
  CHECK(k == k.transpose());

  const Cyc d = k.det();
  CHECK_FALSE(d.is_zero());
  // Frozen regression value for the canonical basis construction.
  CHECK(d == Cyc(Rational("9618527719784448")));
}

TEST_CASE("Killing form is bracket invariant") {
  // K([a,b],c) + K(b,[a,c]) = 0; checked on basis triples via ad matrices.
  const auto& basis = derivation_space().elements();
  const auto& space = derivation_space();
  auto killing = [&](const Matrix& x, const Matrix& y) {
    // trace of ad(x) ad(y) over the canonical basis coordinates
    Matrix adx(kDerDim, kDerDim), ady(kDerDim, kDerDim);
    for (size_t j = 0; j < kDerDim; ++j) {
      const Vec bx = space.coordinates(bracket(x, basis[j]));
      const Vec by = space.coordinates(bracket(y, basis[j]));
      for (size_t i = 0; i < kDerDim; ++i) {
        adx.at(i, j) = bx[i];
        ady.at(i, j) = by[i];
      }
    }
    return (adx * ady).trace();
  };

  std::mt19937 rng(606060u);
  std::uniform_int_distribution<size_t> pick(0, kDerDim - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix& a = basis[pick(rng)];
    const Matrix& b = basis[pick(rng)];
    const Matrix& c = basis[pick(rng)];
    REQUIRE(killing(bracket(a, b), c) + killing(b, bracket(a, c)) ==
            Cyc::zero());
  }
}

TEST_CASE("flatten and unflatten invert each other") {
  std::mt19937 rng(707070u);
  const Matrix d = random_derivation(rng);
  CHECK(unflatten(flatten(d), 8, 8) == d);
  CHECK(flatten(d).size() == 64);
}

TEST_CASE("multiplication operator matrices") {
  // Columns of the left multiplication matrix are the products with basis
  // vectors; same for right multiplication acting from the other side.
  for (int i = 0; i < kOctDim; ++i) {
    const Oct x = Oct::basis(i);
    const Matrix lm = left_mult_matrix(x);
    const Matrix rm = right_mult_matrix(x);
    for (int j = 0; j < kOctDim; ++j) {
      REQUIRE(mat_vec(lm, oct_to_vec(Oct::basis(j))) ==
              oct_to_vec(oct_mul(x, Oct::basis(j))));
      REQUIRE(mat_vec(rm, oct_to_vec(Oct::basis(j))) ==
              oct_to_vec(oct_mul(Oct::basis(j), x)));
    }
  }
}
