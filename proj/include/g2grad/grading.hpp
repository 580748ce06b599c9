#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "g2grad/abelian.hpp"
#include "g2grad/derivations.hpp"
#include "g2grad/subspace.hpp"

namespace g2grad {

/// The two algebras gradings live on: the split octonions C (dimension 8)
/// and their derivation algebra L = Der(C) (dimension 14), the latter in
/// coordinates of the canonical derivation basis.
enum class Ambient { Octonion, Derivations };

size_t ambient_dim(Ambient a);
std::string ambient_name(Ambient a);  // "octonion" / "g2"
Ambient ambient_from_name(const std::string& name);

/// Product on ambient coordinate vectors: the octonion product, or the Lie
/// bracket expressed in the canonical derivation basis.
Vec graded_product(Ambient amb, const Vec& a, const Vec& b);

/// Group grading of one of the two ambient algebras; only nonzero
/// components are stored.
struct Grading {
  AbelianGroup group;
  Ambient ambient = Ambient::Octonion;
  std::map<GroupElement, Subspace> components;

  std::vector<GroupElement> support() const;
  /// Component at the label; the zero subspace when absent.
  Subspace component(const GroupElement& label) const;
  size_t total_dim() const;
  std::map<GroupElement, size_t> dims() const;

  friend bool operator==(const Grading& a, const Grading& b) {
    return a.group == b.group && a.ambient == b.ambient &&
           a.components == b.components;
  }
  friend bool operator!=(const Grading& a, const Grading& b) {
    return !(a == b);
  }
};

struct VerifyFailure {
  std::string reason;
  /// Labels of the offending component pair, when a product escapes.
  std::optional<GroupElement> left, right;
  std::string witness;
};

struct VerifyReport {
  bool ok = true;
  size_t pairs_checked = 0;
  std::optional<VerifyFailure> failure;
};

/// Checks that the components decompose the algebra as a direct sum, that
/// the support generates the group, and that every component product lands
/// in the component of the product label.
VerifyReport verify_grading(const Grading& g);

/// Request for one of the nine canonical octonion grading families.
/// Parameters are named group elements; each type constrains their orders
/// and the distinctness of the labels they generate.
struct GradingDescriptor {
  int type = 0;  // 1..9
  std::map<std::string, GroupElement> params;
};

/// Parameter names required by a type: {"g"}, {"g","h"} or {"g","h","k"}.
std::vector<std::string> descriptor_param_names(int type);

/// Throws std::invalid_argument naming the violated constraint.
void check_descriptor(const AbelianGroup& group, const GradingDescriptor& d);

/// Component dimensions the descriptor produces, by label, without
/// constructing any subspaces.
std::map<GroupElement, size_t> descriptor_dims(const AbelianGroup& group,
                                               const GradingDescriptor& d);

/// The canonical octonion grading of the descriptor's type.
Grading canonical_c_grading(const AbelianGroup& group,
                            const GradingDescriptor& d);

/// Degrees assigned to (u1, u2, u3) by the canonical grading; they always
/// multiply to the identity. Types 1..8 (the type 9 components do not
/// contain the u_i as homogeneous vectors).
std::array<GroupElement, 3> elementary_tuple(const AbelianGroup& group,
                                             const GradingDescriptor& d);

/// Transfers an octonion grading to the derivation algebra: the component
/// at d consists of the derivations mapping each C_g into C_{dg}.
Grading induce_on_L(const Grading& c);

/// The derivation-algebra grading built directly from a degree triple on
/// (u1, u2, u3): the diagonal sl3 part sits at the identity, the off
/// diagonal sl3 derivations at degree differences, and the inner
/// derivations D(e1,u_i), D(e2,v_i) at t_i and -t_i. The triple must
/// multiply to the identity. Components with equal labels merge.
Grading elementary_L_grading(const AbelianGroup& group,
                             const std::array<GroupElement, 3>& degrees);

/// The fine derivation-algebra grading attached to the type 9 octonion
/// grading with parameters (g, h, k): seven 2-dimensional components and a
/// zero identity component.
Grading type9_L_grading(const AbelianGroup& group, const GroupElement& g,
                        const GroupElement& h, const GroupElement& k);

/// Matrix of the algebra automorphism a character defines: multiplication
/// by chi(label) on the component at label.
Matrix character_automorphism(const Grading& g, const Character& chi);

/// Recovers a grading from a character action. Validates that the trivial
/// character acts as the identity, that the maps compose homomorphically,
/// and that each map is an algebra automorphism; then cuts components out
/// as joint eigenspaces. Left inverse of character_automorphism.
Grading grading_from_action(const AbelianGroup& group, Ambient amb,
                            const std::map<Character, Matrix>& action);

/// Moves the component at each label to sigma(label).
Grading relabel(const Grading& g, const GroupAutomorphism& sigma);

}  // namespace g2grad
