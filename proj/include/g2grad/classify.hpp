#pragma once

#include "g2grad/grading.hpp"

namespace g2grad {

/// Isomorphism-invariant fingerprint of an octonion grading: everything
/// here is preserved by algebra automorphisms combined with group
/// automorphisms, so differing signatures prove non-isomorphic gradings.
struct GradingSignature {
  std::vector<long> invariant_factors;
  /// Sorted multiset of (component dimension, label order) pairs.
  std::vector<std::pair<size_t, long>> dim_order_profile;
  size_t identity_dim = 0;
  size_t support_size = 0;

  std::string str() const;

  friend bool operator==(const GradingSignature& a,
                         const GradingSignature& b) {
    return a.invariant_factors == b.invariant_factors &&
           a.dim_order_profile == b.dim_order_profile &&
           a.identity_dim == b.identity_dim &&
           a.support_size == b.support_size;
  }
  friend bool operator!=(const GradingSignature& a,
                         const GradingSignature& b) {
    return !(a == b);
  }
};

/// Octonion gradings only; throws std::invalid_argument otherwise.
GradingSignature signature(const Grading& g);

struct Classification {
  bool recognized = false;
  int type = 0;
  /// Lexicographically least canonical parameters producing the input's
  /// component layout.
  GradingDescriptor descriptor;
  /// Group automorphism carrying the canonical labels onto the input's:
  /// the input has the same component dimensions as
  /// relabel(canonical_c_grading(descriptor), sigma).
  GroupAutomorphism sigma;
  std::string reason;  // set when unrecognized
};

/// Matches a verified octonion grading against the nine canonical families.
/// Throws std::invalid_argument when the input is not a valid grading.
Classification classify_c_grading(const Grading& g);

enum class IsoVerdict { NonIsomorphic, SameTypeRecognized, Inconclusive };

std::string verdict_name(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  std::string detail;
};

/// Compares two octonion gradings. NonIsomorphic requires a separating
/// invariant; SameTypeRecognized requires both to classify to the same
/// family over identically presented groups with automorphism-aligned
/// labels; everything else is reported Inconclusive, in particular groups
/// that are isomorphic but presented with different factor lists.
IsoResult iso_check(const Grading& a, const Grading& b);

}  // namespace g2grad
