#pragma once

#include <string>
#include <vector>

#include "g2grad/cyclotomic.hpp"

namespace g2grad {

/// Element of a finite abelian group in a fixed factor decomposition: one
/// residue per factor, each in [0, factor). Componentwise addition.
using GroupElement = std::vector<int>;

/// Finite abelian group presented as an explicit product Z_f1 x ... x Z_fk.
/// The factor list is kept verbatim (not reduced to invariant factors), so
/// Z_2 x Z_3 and Z_6 are distinct presentations of isomorphic groups.
class AbelianGroup {
 public:
  AbelianGroup() = default;  // trivial group, empty factor list
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  size_t num_factors() const { return factors_.size(); }
  long order() const;
  /// lcm of the factors; the largest element order.
  long exponent() const;

  GroupElement identity() const;
  bool is_element(const GroupElement& g) const;
  /// Throws std::invalid_argument when g is not a valid residue tuple.
  void require_element(const GroupElement& g) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement scalar_mul(long n, const GroupElement& a) const;
  long element_order(const GroupElement& a) const;

  /// All elements in lexicographic residue order; identity first.
  std::vector<GroupElement> elements() const;
  /// i-th canonical generator (1 in slot i, 0 elsewhere).
  GroupElement generator(size_t i) const;

  /// Subgroup generated by the given elements, as a sorted element list.
  std::vector<GroupElement> subgroup(const std::vector<GroupElement>& gens) const;
  bool generates(const std::vector<GroupElement>& gens) const;

  /// Invariant factor decomposition d1 | d2 | ... | dk (ascending); the
  /// isomorphism invariant of the group.
  std::vector<long> invariant_factors() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) {
    return !(a == b);
  }

 private:
  std::vector<int> factors_;
};

std::string element_str(const GroupElement& g);

/// Character of an abelian group: one exponent per factor. The value on an
/// element is a root of unity of order dividing the group exponent.
struct Character {
  std::vector<int> exponents;

  friend bool operator==(const Character& a, const Character& b) {
    return a.exponents == b.exponents;
  }
  friend bool operator<(const Character& a, const Character& b) {
    return a.exponents < b.exponents;
  }
};

/// chi(g) as an exact root of unity in Q(zeta_exponent).
Cyc char_eval(const AbelianGroup& g, const Character& chi,
              const GroupElement& x);

/// The full dual group, |G| characters, trivial character first; the order
/// matches elements() under exponents <-> residues.
std::vector<Character> characters(const AbelianGroup& g);

Character char_product(const AbelianGroup& g, const Character& a,
                       const Character& b);

/// Group automorphism recorded by its images of the canonical generators.
struct GroupAutomorphism {
  std::vector<GroupElement> images;

  GroupElement apply(const AbelianGroup& g, const GroupElement& x) const;

  friend bool operator==(const GroupAutomorphism& a,
                         const GroupAutomorphism& b) {
    return a.images == b.images;
  }
  friend bool operator<(const GroupAutomorphism& a,
                        const GroupAutomorphism& b) {
    return a.images < b.images;
  }
};

/// All automorphisms, by brute-force enumeration of generator images.
/// Guarded to groups of order at most 64; larger inputs throw
/// std::invalid_argument.
std::vector<GroupAutomorphism> automorphisms(const AbelianGroup& g);

GroupAutomorphism compose(const AbelianGroup& g, const GroupAutomorphism& f,
                          const GroupAutomorphism& h);  // f after h

}  // namespace g2grad
