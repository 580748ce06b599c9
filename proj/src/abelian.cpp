#include "g2grad/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace g2grad {

AbelianGroup::AbelianGroup(std::vector<int> factors)
    : factors_(std::move(factors)) {
  for (int f : factors_)
    if (f < 2)
      throw std::invalid_argument("group factors must be at least 2");
}

long AbelianGroup::order() const {
  long n = 1;
  for (int f : factors_) n *= f;
  return n;
}

long AbelianGroup::exponent() const {
  long e = 1;
  for (int f : factors_) e = std::lcm(e, static_cast<long>(f));
  return e;
}

GroupElement AbelianGroup::identity() const {
  return GroupElement(factors_.size(), 0);
}

bool AbelianGroup::is_element(const GroupElement& g) const {
  if (g.size() != factors_.size()) return false;
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i] < 0 || g[i] >= factors_[i]) return false;
  return true;
}

void AbelianGroup::require_element(const GroupElement& g) const {
  if (!is_element(g))
    throw std::invalid_argument("element " + element_str(g) +
                                " is not a valid residue tuple for the group");
}

GroupElement AbelianGroup::add(const GroupElement& a,
                               const GroupElement& b) const {
  require_element(a);
  require_element(b);
  GroupElement out(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i)
    out[i] = (a[i] + b[i]) % factors_[i];
  return out;
}

GroupElement AbelianGroup::neg(const GroupElement& a) const {
  require_element(a);
  GroupElement out(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i)
    out[i] = (factors_[i] - a[i]) % factors_[i];
  return out;
}

GroupElement AbelianGroup::sub(const GroupElement& a,
                               const GroupElement& b) const {
  return add(a, neg(b));
}

GroupElement AbelianGroup::scalar_mul(long n, const GroupElement& a) const {
  require_element(a);
  GroupElement out(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    long r = (n % factors_[i]) * a[i] % factors_[i];
    if (r < 0) r += factors_[i];
    out[i] = static_cast<int>(r);
  }
  return out;
}

long AbelianGroup::element_order(const GroupElement& a) const {
  require_element(a);
  long ord = 1;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const long f = factors_[i];
    const long component_order = f / std::gcd(f, static_cast<long>(a[i]));
    ord = std::lcm(ord, component_order);
  }
  return ord;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  GroupElement cur = identity();
  while (true) {
    out.push_back(cur);
    size_t i = factors_.size();
    while (i > 0) {
      --i;
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

GroupElement AbelianGroup::generator(size_t i) const {
  if (i >= factors_.size()) throw std::invalid_argument("generator index");
  GroupElement g = identity();
  g[i] = 1;
  return g;
}

std::vector<GroupElement> AbelianGroup::subgroup(
    const std::vector<GroupElement>& gens) const {
  std::set<GroupElement> seen;
  std::vector<GroupElement> frontier = {identity()};
  seen.insert(identity());
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        GroupElement y = add(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool AbelianGroup::generates(const std::vector<GroupElement>& gens) const {
  return static_cast<long>(subgroup(gens).size()) == order();
}

std::vector<long> AbelianGroup::invariant_factors() const {
  // Collect prime power components, then rebuild the divisibility chain by
  // taking the largest power of each prime for the last factor, and so on.
  std::map<long, std::vector<long>> prime_powers;  // prime -> descending powers
  for (int f : factors_) {
    long m = f;
    for (long p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      long q = 1;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      prime_powers[p].push_back(q);
    }
    if (m > 1) prime_powers[m].push_back(m);
  }
  size_t chain_len = 0;
  for (auto& [p, powers] : prime_powers) {
    std::sort(powers.begin(), powers.end(), std::greater<long>());
    chain_len = std::max(chain_len, powers.size());
  }
  std::vector<long> chain(chain_len, 1);
  for (auto& [p, powers] : prime_powers)
    for (size_t i = 0; i < powers.size(); ++i)
      chain[chain_len - 1 - i] *= powers[i];
  return chain;
}

std::string element_str(const GroupElement& g) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) out << ",";
    out << g[i];
  }
  out << ")";
  return out.str();
}

Cyc char_eval(const AbelianGroup& g, const Character& chi,
              const GroupElement& x) {
  if (chi.exponents.size() != g.num_factors())
    throw std::invalid_argument("character arity mismatch");
  g.require_element(x);
  const long n = g.exponent();
  long total = 0;
  for (size_t i = 0; i < g.num_factors(); ++i) {
    const long step = n / g.factors()[i];
    total = (total + static_cast<long>(chi.exponents[i]) * x[i] % n * step) % n;
  }
  return Cyc::root_of_unity(n, total);
}

std::vector<Character> characters(const AbelianGroup& g) {
  std::vector<Character> out;
  out.reserve(g.order());
  for (const auto& e : g.elements()) out.push_back(Character{e});
  return out;
}

Character char_product(const AbelianGroup& g, const Character& a,
                       const Character& b) {
  if (a.exponents.size() != g.num_factors() ||
      b.exponents.size() != g.num_factors())
    throw std::invalid_argument("character arity mismatch");
  Character out;
  out.exponents.resize(g.num_factors());
  for (size_t i = 0; i < g.num_factors(); ++i)
    out.exponents[i] = (a.exponents[i] + b.exponents[i]) % g.factors()[i];
  return out;
}

GroupElement GroupAutomorphism::apply(const AbelianGroup& g,
                                      const GroupElement& x) const {
  g.require_element(x);
  if (images.size() != g.num_factors())
    throw std::invalid_argument("automorphism arity mismatch");
  GroupElement out = g.identity();
  for (size_t i = 0; i < images.size(); ++i)
    out = g.add(out, g.scalar_mul(x[i], images[i]));
  return out;
}

std::vector<GroupAutomorphism> automorphisms(const AbelianGroup& g) {
  if (g.order() > 64)
    throw std::invalid_argument(
        "automorphism enumeration is limited to groups of order <= 64");
  const auto all = g.elements();
  const size_t k = g.num_factors();

  // Candidate images of generator i must have order dividing the factor.
  std::vector<std::vector<GroupElement>> candidates(k);
  for (size_t i = 0; i < k; ++i)
    for (const auto& x : all)
      if (g.factors()[i] % g.element_order(x) == 0) candidates[i].push_back(x);

  std::vector<GroupAutomorphism> out;
  std::vector<GroupElement> images(k);
  auto recurse = [&](auto&& self, size_t i) -> void {
    if (i == k) {
      if (g.generates(images)) out.push_back(GroupAutomorphism{images});
      return;
    }
    for (const auto& x : candidates[i]) {
      images[i] = x;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

GroupAutomorphism compose(const AbelianGroup& g, const GroupAutomorphism& f,
                          const GroupAutomorphism& h) {
  GroupAutomorphism out;
  out.images.reserve(g.num_factors());
  for (size_t i = 0; i < g.num_factors(); ++i)
    out.images.push_back(f.apply(g, h.apply(g, g.generator(i))));
  return out;
}

}  // namespace g2grad
