#pragma once

#include <array>
#include <string>

#include "g2grad/matrix.hpp"

namespace g2grad {

/// Coordinate slots of the standard split octonion basis. e1, e2 are the
/// orthogonal idempotents (e1 + e2 = 1); u1..u3 and v1..v3 span the two
/// 3-dimensional Peirce pieces.
enum OctIndex : int {
  kE1 = 0,
  kE2 = 1,
  kU1 = 2,
  kU2 = 3,
  kU3 = 4,
  kV1 = 5,
  kV2 = 6,
  kV3 = 7,
};
inline constexpr int kOctDim = 8;

const char* oct_basis_name(int i);

/// Split octonion as exact coordinates in the standard basis.
struct Oct {
  std::array<Cyc, kOctDim> c;

  Oct() = default;
  static Oct basis(int i);
  static Oct one();  // e1 + e2

  bool is_zero() const;
  Oct operator-() const;
  Oct& operator+=(const Oct& o);
  Oct& operator-=(const Oct& o);
  friend Oct operator+(Oct a, const Oct& b) { return a += b; }
  friend Oct operator-(Oct a, const Oct& b) { return a -= b; }
  friend Oct operator*(const Cyc& s, Oct x);
  friend bool operator==(const Oct& a, const Oct& b) { return a.c == b.c; }
  friend bool operator!=(const Oct& a, const Oct& b) { return !(a == b); }
};

Oct oct_from_vec(const Vec& v);
Vec oct_to_vec(const Oct& x);

/// Product of basis elements i and j per the structure constant table.
/// Returns the basis index of the product and writes its sign (+1/-1), or
/// returns -1 with sign 0 when the product vanishes.
int table_product(int i, int j, int* sign);

/// Bilinear extension of the structure constant table.
Oct oct_mul(const Oct& a, const Oct& b);

/// Same product computed from the closed Zorn vector-matrix form
/// (dot and cross products of the 3-vector parts); an independent route
/// used to cross-check oct_mul.
Oct zorn_mul(const Oct& a, const Oct& b);

/// Swaps the idempotents and negates the vector parts; an involution with
/// conjugate(x*y) == conjugate(y)*conjugate(x).
Oct conjugate(const Oct& x);

/// trace(x) * 1 == x + conjugate(x).
Cyc oct_trace(const Oct& x);

/// Quadratic norm: x * conjugate(x) == norm(x) * 1. Multiplicative:
/// norm(x*y) == norm(x)*norm(y).
Cyc oct_norm(const Oct& x);

/// Polarization of the norm: norm(x+y) - norm(x) - norm(y).
Cyc oct_bilinear(const Oct& x, const Oct& y);

struct TableReport {
  bool ok = true;
  size_t products_checked = 0;
  size_t identity_checked = 0;
  size_t alternative_checked = 0;
  std::vector<std::string> failures;
};

/// Exhaustive cross-check of the two multiplication routes on all basis
/// pairs, identity behavior, and the alternative laws x(xy)=(xx)y and
/// (yx)x=y(xx).
TableReport check_table();

}  // namespace g2grad
