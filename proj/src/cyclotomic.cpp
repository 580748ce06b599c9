#include "g2grad/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace g2grad {

namespace {

using Poly = std::vector<Rational>;  // coefficients, constant term first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo a monic polynomial m, in place.
void mod_monic(Poly& p, const Poly& m) {
  const size_t deg_m = m.size() - 1;
  while (p.size() > deg_m) {
    const Rational lead = p.back();
    p.pop_back();
    if (lead == 0) continue;
    const size_t shift = p.size() - deg_m;
    for (size_t i = 0; i + 1 < m.size(); ++i) p[shift + i] -= lead * m[i];
  }
}

// Quotient and remainder for a general nonzero divisor.
void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  rem = num;
  trim(rem);
  Poly d = den;
  trim(d);
  if (d.empty()) throw std::domain_error("polynomial division by zero");
  quot.assign(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0,
              Rational(0));
  const Rational lead_inv = Rational(1) / d.back();
  while (rem.size() >= d.size()) {
    const Rational c = rem.back() * lead_inv;
    const size_t shift = rem.size() - d.size();
    quot[shift] = c;
    for (size_t i = 0; i < d.size(); ++i) rem[shift + i] -= c * d[i];
    // The leading term cancels exactly; anything left is a zero tail.
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.size() > shift + d.size() - 1)
      throw std::logic_error("polynomial division failed to reduce degree");
  }
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

long euler_phi(long n) {
  if (n < 1) throw std::domain_error("euler_phi needs n >= 1");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::map<long, Poly> cache;
  if (n < 1) throw std::domain_error("cyclotomic polynomial needs n >= 1");
  std::lock_guard<std::mutex> lock(mu);
  // Fill the cache bottom-up over the divisors of n, so each step only needs
  // polynomials already present.
  for (long d = 1; d <= n; ++d) {
    if (n % d || cache.count(d)) continue;
    Poly phi;
    if (d == 1) {
      phi = {Rational(-1), Rational(1)};  // x - 1
    } else {
      // (x^d - 1) / prod of cyclotomic polynomials of the proper divisors.
      Poly num(d + 1, Rational(0));
      num[0] = -1;
      num[d] = 1;
      for (long e = 1; e < d; ++e) {
        if (d % e) continue;
        Poly quot, rem;
        divmod(num, cache.at(e), quot, rem);
        if (!rem.empty())
          throw std::logic_error(
              "cyclotomic polynomial division left remainder");
        num = std::move(quot);
      }
      phi = std::move(num);
    }
    cache.emplace(d, std::move(phi));
  }
  return cache.at(n);
}

namespace {

// Coefficient vector of value a viewed inside Q(zeta_m); m must be a
// multiple of a's conductor. Result has exactly phi(m) entries.
Poly lift_coeffs(long conductor, const Poly& coeffs, long m) {
  if (m % conductor)
    throw std::logic_error("conductor lift target not a multiple");
  if (m == conductor) return coeffs;
  const long ratio = m / conductor;
  Poly p((coeffs.size() - 1) * ratio + 1, Rational(0));
  for (size_t i = 0; i < coeffs.size(); ++i) p[i * ratio] = coeffs[i];
  mod_monic(p, cyclotomic_polynomial(m));
  p.resize(euler_phi(m), Rational(0));
  return p;
}

}  // namespace

Cyc::Cyc(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor_ < 1) throw std::domain_error("conductor must be >= 1");
  mod_monic(coeffs_, cyclotomic_polynomial(conductor_));
  coeffs_.resize(euler_phi(conductor_), Rational(0));
  bool rational = true;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) {
      rational = false;
      break;
    }
  if (rational && conductor_ != 1) {
    conductor_ = 1;
    coeffs_.resize(1);
  }
}

Cyc Cyc::root_of_unity(long n, long k) {
  if (n < 1) throw std::domain_error("root_of_unity needs n >= 1");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  c[k] = 1;
  return Cyc(n, std::move(c));
}

Cyc Cyc::from_coeffs(long n, std::vector<Rational> coeffs) {
  return Cyc(n, std::move(coeffs));
}

bool Cyc::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

const Rational& Cyc::rational_value() const {
  if (conductor_ != 1)
    throw std::domain_error("value is not rational: " + str());
  return coeffs_[0];
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (conductor_ == o.conductor_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    if (conductor_ != 1) *this = Cyc(conductor_, std::move(coeffs_));
    return *this;
  }
  const long m = std::lcm(conductor_, o.conductor_);
  Poly a = lift_coeffs(conductor_, coeffs_, m);
  const Poly b = lift_coeffs(o.conductor_, o.coeffs_, m);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  *this = Cyc(m, std::move(a));
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  const long m = std::lcm(conductor_, o.conductor_);
  const Poly a = lift_coeffs(conductor_, coeffs_, m);
  const Poly b = lift_coeffs(o.conductor_, o.coeffs_, m);
  *this = Cyc(m, mul(a, b));
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (conductor_ == 1) return Cyc(Rational(1) / coeffs_[0]);

  // Extended Euclid in Q[x] against the cyclotomic polynomial, which is
  // irreducible, so the gcd is a nonzero constant.
  Poly r0 = cyclotomic_polynomial(conductor_);
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0 = {};
  Poly s1 = {Rational(1)};
  while (!r1.empty()) {
    Poly quot, rem;
    divmod(r0, r1, quot, rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly next = sub(s0, mul(quot, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  if (r0.size() != 1)
    throw std::logic_error("cyclotomic polynomial shares a factor");
  const Rational inv_g = Rational(1) / r0[0];
  for (auto& c : s0) c *= inv_g;
  return Cyc(conductor_, std::move(s0));
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const long m = std::lcm(a.conductor_, b.conductor_);
  return lift_coeffs(a.conductor_, a.coeffs_, m) ==
         lift_coeffs(b.conductor_, b.coeffs_, m);
}

bool operator<(const Cyc& a, const Cyc& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_;
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Cyc::str() const {
  if (conductor_ == 1) return rational_to_string(coeffs_[0]);
  std::ostringstream out;
  out << "cyc(" << conductor_ << "):";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ",";
    out << rational_to_string(coeffs_[i]);
  }
  return out.str();
}

Cyc Cyc::parse(const std::string& s) {
  if (s.rfind("cyc(", 0) != 0) return Cyc(rational_from_string(s));
  const size_t close = s.find(')');
  if (close == std::string::npos || close + 1 >= s.size() || s[close + 1] != ':')
    throw std::invalid_argument("bad cyclotomic literal '" + s + "'");
  long n = 0;
  try {
    size_t used = 0;
    n = std::stol(s.substr(4, close - 4), &used);
    if (used != close - 4) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad conductor in '" + s + "'");
  }
  if (n < 1) throw std::invalid_argument("bad conductor in '" + s + "'");
  std::vector<Rational> coeffs;
  std::string body = s.substr(close + 2);
  if (body.empty()) throw std::invalid_argument("empty coefficients in '" + s + "'");
  std::istringstream in(body);
  std::string piece;
  while (std::getline(in, piece, ','))
    coeffs.push_back(rational_from_string(piece));
  if (coeffs.size() > static_cast<size_t>(euler_phi(n)))
    throw std::invalid_argument("too many coefficients in '" + s + "'");
  return Cyc(n, std::move(coeffs));
}

}  // namespace g2grad
