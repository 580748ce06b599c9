#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace g2grad {

/// Exact rational scalar backed by GMP. Arithmetic keeps values canonical
/// (reduced, positive denominator) as long as inputs are canonical, so all
/// construction paths below canonicalize.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p" (base 10).
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// Renders "p/q", or plain "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace g2grad
