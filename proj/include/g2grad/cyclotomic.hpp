#pragma once

#include <string>
#include <vector>

#include "g2grad/rational.hpp"

namespace g2grad {

/// Element of a cyclotomic field Q(zeta_N), stored as a polynomial in
/// zeta_N reduced modulo the N-th cyclotomic polynomial, so the coefficient
/// vector always has exactly phi(N) entries. N is the value's conductor.
///
/// Rationals live at conductor 1. Arithmetic on mixed conductors lifts both
/// operands into Q(zeta_lcm) first, and any result whose non-constant
/// coefficients vanish is renormalized back to conductor 1. Purely rational
/// values therefore always compare equal regardless of how they were built.
class Cyc {
 public:
  Cyc() : conductor_(1), coeffs_(1, Rational(0)) {}
  explicit Cyc(const Rational& r) : conductor_(1), coeffs_(1, r) {}
  explicit Cyc(long n) : conductor_(1), coeffs_(1, Rational(n)) {}

  static Cyc zero() { return Cyc(); }
  static Cyc one() { return Cyc(1); }

  /// zeta_n^k, for any integer k (reduced mod n).
  static Cyc root_of_unity(long n, long k);
  static Cyc zeta(long n) { return root_of_unity(n, 1); }

  /// Builds a value from raw polynomial coefficients in zeta_n. Accepts any
  /// degree; reduces modulo the cyclotomic polynomial and renormalizes.
  static Cyc from_coeffs(long n, std::vector<Rational> coeffs);

  long conductor() const { return conductor_; }
  /// Coefficients of 1, zeta, ..., zeta^(phi(N)-1); size phi(conductor()).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  /// The value as a rational; only valid when is_rational().
  const Rational& rational_value() const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyc inverse() const;
  Cyc operator/(const Cyc& o) const { return *this * o.inverse(); }

  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }
  /// Total order (conductor, then coefficients); used for map keys only,
  /// not compatible with any field structure. Equal values compare equal
  /// because representations are normalized.
  friend bool operator<(const Cyc& a, const Cyc& b);

  /// "p/q" for rational values, "cyc(N):c0,c1,..." otherwise.
  std::string str() const;
  /// Inverse of str(); also accepts plain rational literals.
  static Cyc parse(const std::string& s);

 private:
  Cyc(long conductor, std::vector<Rational> coeffs);

  long conductor_;
  std::vector<Rational> coeffs_;
};

long euler_phi(long n);

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// Cached; the returned reference stays valid for the program lifetime.
const std::vector<Rational>& cyclotomic_polynomial(long n);

}  // namespace g2grad
