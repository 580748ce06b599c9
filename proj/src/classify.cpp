#include "g2grad/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace g2grad {

std::string GradingSignature::str() const {
  std::ostringstream out;
  out << "invariant factors [";
  for (size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out << ",";
    out << invariant_factors[i];
  }
  out << "]; (dim,order) profile [";
  for (size_t i = 0; i < dim_order_profile.size(); ++i) {
    if (i) out << ",";
    out << "(" << dim_order_profile[i].first << ","
        << dim_order_profile[i].second << ")";
  }
  out << "]; identity dim " << identity_dim << "; support size "
      << support_size;
  return out.str();
}

GradingSignature signature(const Grading& g) {
  if (g.ambient != Ambient::Octonion)
    throw std::invalid_argument(
        "signatures are defined for octonion gradings");
  GradingSignature sig;
  sig.invariant_factors = g.group.invariant_factors();
  sig.support_size = g.components.size();
  for (const auto& [label, comp] : g.components) {
    sig.dim_order_profile.emplace_back(comp.dim(),
                                       g.group.element_order(label));
    if (label == g.group.identity()) sig.identity_dim = comp.dim();
  }
  std::sort(sig.dim_order_profile.begin(), sig.dim_order_profile.end());
  return sig;
}

namespace {

std::multiset<size_t> dim_multiset(const GradingSignature& sig) {
  std::multiset<size_t> dims;
  for (const auto& [dim, order] : sig.dim_order_profile) dims.insert(dim);
  return dims;
}

// The single family a signature can belong to, or 0. Support size plus the
// dimension multiset separates all nine families except 6 vs 8, which the
// group invariant (Z4 vs Z2^2 is forced by generation) settles.
int candidate_type(const GradingSignature& sig) {
  const auto dims = dim_multiset(sig);
  switch (sig.support_size) {
    case 2:
      if (dims == std::multiset<size_t>{4, 4}) return 7;
      break;
    case 3:
      if (dims == std::multiset<size_t>{2, 2, 4}) return 4;
      if (dims == std::multiset<size_t>{2, 3, 3}) return 5;
      break;
    case 4:
      if (dims == std::multiset<size_t>{2, 2, 2, 2}) {
        if (sig.invariant_factors == std::vector<long>{4}) return 6;
        if (sig.invariant_factors == std::vector<long>{2, 2}) return 8;
      }
      break;
    case 5:
      if (dims == std::multiset<size_t>{1, 1, 2, 2, 2}) return 3;
      break;
    case 6:
      if (dims == std::multiset<size_t>{1, 1, 1, 1, 2, 2}) return 1;
      break;
    case 7:
      if (dims == std::multiset<size_t>{1, 1, 1, 1, 1, 1, 2}) return 2;
      break;
    case 8:
      if (dims == std::multiset<size_t>{1, 1, 1, 1, 1, 1, 1, 1}) return 9;
      break;
    default:
      break;
  }
  return 0;
}

bool dims_align(const AbelianGroup& group,
                const std::map<GroupElement, size_t>& canonical,
                const std::map<GroupElement, size_t>& input,
                const GroupAutomorphism& sigma) {
  if (canonical.size() != input.size()) return false;
  for (const auto& [label, dim] : canonical) {
    auto it = input.find(sigma.apply(group, label));
    if (it == input.end() || it->second != dim) return false;
  }
  return true;
}

}  // namespace

Classification classify_c_grading(const Grading& g) {
  const VerifyReport report = verify_grading(g);
  if (!report.ok)
    throw std::invalid_argument("input is not a valid grading: " +
                                report.failure->reason);
  const GradingSignature sig = signature(g);

  Classification result;
  const int type = candidate_type(sig);
  if (type == 0) {
    result.reason = "no canonical family matches: " + sig.str();
    return result;
  }

  std::vector<GroupAutomorphism> autos;
  try {
    autos = automorphisms(g.group);
  } catch (const std::invalid_argument&) {
    result.reason = "group order exceeds the automorphism search limit";
    return result;
  }
  std::sort(autos.begin(), autos.end());

  const auto input_dims = g.dims();
  const auto elements = g.group.elements();
  const auto names = descriptor_param_names(type);

  auto try_params = [&](std::map<std::string, GroupElement> params) -> bool {
    GradingDescriptor d;
    d.type = type;
    d.params = std::move(params);
    try {
      check_descriptor(g.group, d);
    } catch (const std::invalid_argument&) {
      return false;
    }
    const auto canonical = descriptor_dims(g.group, d);
    for (const auto& sigma : autos)
      if (dims_align(g.group, canonical, input_dims, sigma)) {
        result.recognized = true;
        result.type = type;
        result.descriptor = d;
        result.sigma = sigma;
        return true;
      }
    return false;
  };

  // Parameter tuples in lexicographic order, so the reported descriptor is
  // the least one aligning with the input.
  std::function<bool(size_t, std::map<std::string, GroupElement>&)> search =
      [&](size_t i, std::map<std::string, GroupElement>& acc) -> bool {
    if (i == names.size()) return try_params(acc);
    for (const auto& x : elements) {
      acc[names[i]] = x;
      if (search(i + 1, acc)) return true;
    }
    acc.erase(names[i]);
    return false;
  };
  std::map<std::string, GroupElement> acc;
  if (search(0, acc)) return result;

  result.reason = "signature matches type " + std::to_string(type) +
                  " but no parameter assignment aligns with the input";
  return result;
}

std::string verdict_name(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::NonIsomorphic:
      return "non_isomorphic";
    case IsoVerdict::SameTypeRecognized:
      return "same_type_recognized";
    case IsoVerdict::Inconclusive:
      return "inconclusive";
  }
  throw std::logic_error("unknown verdict");
}

IsoResult iso_check(const Grading& a, const Grading& b) {
  for (const Grading* g : {&a, &b}) {
    const VerifyReport report = verify_grading(*g);
    if (!report.ok)
      throw std::invalid_argument(
          std::string(g == &a ? "first" : "second") +
          " input is not a valid grading: " + report.failure->reason);
  }
  const GradingSignature sa = signature(a);
  const GradingSignature sb = signature(b);

  if (sa.invariant_factors != sb.invariant_factors)
    return {IsoVerdict::NonIsomorphic,
            "grading groups are not isomorphic (invariant factors differ)"};
  if (sa.support_size != sb.support_size)
    return {IsoVerdict::NonIsomorphic,
            "support sizes differ (" + std::to_string(sa.support_size) +
                " vs " + std::to_string(sb.support_size) + ")"};
  if (sa.identity_dim != sb.identity_dim)
    return {IsoVerdict::NonIsomorphic,
            "identity component dimensions differ (" +
                std::to_string(sa.identity_dim) + " vs " +
                std::to_string(sb.identity_dim) + ")"};
  if (sa.dim_order_profile != sb.dim_order_profile)
    return {IsoVerdict::NonIsomorphic,
            "component (dimension, label order) profiles differ"};

  const Classification ca = classify_c_grading(a);
  const Classification cb = classify_c_grading(b);
  if (!ca.recognized || !cb.recognized)
    return {IsoVerdict::Inconclusive,
            "classification incomplete: " +
                (ca.recognized ? cb.reason : ca.reason)};
  if (ca.type != cb.type)
    return {IsoVerdict::Inconclusive,
            "signatures agree but recognized types differ"};
  if (a.group != b.group)
    return {IsoVerdict::Inconclusive,
            "groups are isomorphic but presented with different factor "
            "lists; label alignment is not attempted across presentations"};

  const auto dims_a = a.dims();
  const auto dims_b = b.dims();
  for (const auto& sigma : automorphisms(a.group))
    if (dims_align(a.group, dims_a, dims_b, sigma))
      return {IsoVerdict::SameTypeRecognized,
              "both classify as type " + std::to_string(ca.type) +
                  " and a group automorphism aligns the labels"};
  return {IsoVerdict::Inconclusive,
          "both classify as type " + std::to_string(ca.type) +
              " but no group automorphism aligns the labels"};
}

}  // namespace g2grad
