#include "g2grad/grading.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace g2grad {

size_t ambient_dim(Ambient a) {
  return a == Ambient::Octonion ? kOctDim : kDerDim;
}

std::string ambient_name(Ambient a) {
  return a == Ambient::Octonion ? "octonion" : "g2";
}

Ambient ambient_from_name(const std::string& name) {
  if (name == "octonion") return Ambient::Octonion;
  if (name == "g2") return Ambient::Derivations;
  throw std::invalid_argument("unknown ambient algebra '" + name +
                              "' (expected \"octonion\" or \"g2\")");
}

namespace {

// Bracket structure constants in the canonical derivation basis.
const std::vector<std::vector<Vec>>& der_table() {
  static const std::vector<std::vector<Vec>> table = [] {
    const auto& basis = derivation_space();
    std::vector<std::vector<Vec>> t(kDerDim);
    for (size_t i = 0; i < kDerDim; ++i) {
      t[i].reserve(kDerDim);
      for (size_t j = 0; j < kDerDim; ++j)
        t[i].push_back(basis.coordinates(
            bracket(basis.elements()[i], basis.elements()[j])));
    }
    return t;
  }();
  return table;
}

std::string vec_str(const Vec& v) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i].str();
  }
  out << "]";
  return out.str();
}

}  // namespace

Vec graded_product(Ambient amb, const Vec& a, const Vec& b) {
  if (amb == Ambient::Octonion)
    return oct_to_vec(oct_mul(oct_from_vec(a), oct_from_vec(b)));
  if (a.size() != kDerDim || b.size() != kDerDim)
    throw std::invalid_argument("derivation coordinates must have 14 entries");
  const auto& table = der_table();
  Vec out(kDerDim, Cyc::zero());
  for (size_t i = 0; i < kDerDim; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < kDerDim; ++j) {
      if (b[j].is_zero()) continue;
      const Cyc coeff = a[i] * b[j];
      const Vec& structure = table[i][j];
      for (size_t k = 0; k < kDerDim; ++k) {
        if (structure[k].is_zero()) continue;
        out[k] += coeff * structure[k];
      }
    }
  }
  return out;
}

std::vector<GroupElement> Grading::support() const {
  std::vector<GroupElement> out;
  out.reserve(components.size());
  for (const auto& [label, comp] : components) out.push_back(label);
  return out;
}

Subspace Grading::component(const GroupElement& label) const {
  auto it = components.find(label);
  if (it != components.end()) return it->second;
  return Subspace::zero(ambient_dim(ambient));
}

size_t Grading::total_dim() const {
  size_t total = 0;
  for (const auto& [label, comp] : components) total += comp.dim();
  return total;
}

std::map<GroupElement, size_t> Grading::dims() const {
  std::map<GroupElement, size_t> out;
  for (const auto& [label, comp] : components) out[label] = comp.dim();
  return out;
}

VerifyReport verify_grading(const Grading& g) {
  VerifyReport report;
  auto fail = [&](std::string reason, std::optional<GroupElement> left,
                  std::optional<GroupElement> right, std::string witness) {
    report.ok = false;
    report.failure =
        VerifyFailure{std::move(reason), std::move(left), std::move(right),
                      std::move(witness)};
    return report;
  };

  const size_t n = ambient_dim(g.ambient);
  if (g.components.empty())
    return fail("grading has no components", std::nullopt, std::nullopt, "");
  for (const auto& [label, comp] : g.components) {
    if (!g.group.is_element(label))
      return fail("component label " + element_str(label) +
                      " is not an element of the grading group",
                  label, std::nullopt, "");
    if (comp.ambient_dim() != n)
      return fail("component at " + element_str(label) +
                      " lives in the wrong ambient dimension",
                  label, std::nullopt, "");
    if (comp.dim() == 0)
      return fail("component at " + element_str(label) +
                      " is the zero subspace; omit empty components",
                  label, std::nullopt, "");
  }

  std::vector<Vec> all_rows;
  size_t total = 0;
  for (const auto& [label, comp] : g.components) {
    total += comp.dim();
    for (const auto& row : comp.basis_vectors()) all_rows.push_back(row);
  }
  if (total != n)
    return fail("component dimensions sum to " + std::to_string(total) +
                    ", expected " + std::to_string(n),
                std::nullopt, std::nullopt, "");
  if (Subspace::span(n, all_rows).dim() != n)
    return fail("components overlap: their union does not span independently",
                std::nullopt, std::nullopt, "");

  if (!g.group.generates(g.support()))
    return fail("support does not generate the grading group", std::nullopt,
                std::nullopt, "");

  for (const auto& [la, ca] : g.components)
    for (const auto& [lb, cb] : g.components) {
      const Subspace target = g.component(g.group.add(la, lb));
      for (const auto& x : ca.basis_vectors())
        for (const auto& y : cb.basis_vectors()) {
          const Vec p = graded_product(g.ambient, x, y);
          if (vec_is_zero(p)) continue;
          if (!target.contains(p))
            return fail("product escapes the component at the product label",
                        la, lb,
                        vec_str(x) + " * " + vec_str(y) + " = " + vec_str(p) +
                            ", not inside the component at " +
                            element_str(g.group.add(la, lb)));
        }
      ++report.pairs_checked;
    }
  return report;
}

namespace {

Vec unit_oct(int i) {
  Vec v(kOctDim, Cyc::zero());
  v[i] = Cyc::one();
  return v;
}

Vec sum_oct(int i, int j) {
  Vec v(kOctDim, Cyc::zero());
  v[i] = Cyc::one();
  v[j] = Cyc::one();
  return v;
}

// Vector with +1 at pos and -1 at neg.
Vec diff_oct(int pos, int neg) {
  Vec v(kOctDim, Cyc::zero());
  v[pos] = Cyc::one();
  v[neg] = -Cyc::one();
  return v;
}

struct LabeledSpan {
  GroupElement label;
  std::vector<Vec> vectors;
};

// The canonical component layout of each type, as labeled basis lists.
std::vector<LabeledSpan> descriptor_spans(const AbelianGroup& group,
                                          const GradingDescriptor& d) {
  const GroupElement e = group.identity();
  auto param = [&](const char* name) { return d.params.at(name); };
  switch (d.type) {
    case 1: {
      const GroupElement g = param("g"), h = param("h");
      return {{e, {unit_oct(kE1), unit_oct(kE2)}},
              {g, {unit_oct(kU1)}},
              {group.neg(g), {unit_oct(kV1)}},
              {h, {unit_oct(kU3), unit_oct(kV3)}},
              {group.add(g, h), {unit_oct(kV2)}},
              {group.add(group.neg(g), h), {unit_oct(kU2)}}};
    }
    case 2: {
      const GroupElement g = param("g"), h = param("h");
      return {{e, {unit_oct(kE1), unit_oct(kE2)}},
              {g, {unit_oct(kU1)}},
              {h, {unit_oct(kU2)}},
              {group.neg(group.add(g, h)), {unit_oct(kU3)}},
              {group.neg(g), {unit_oct(kV1)}},
              {group.neg(h), {unit_oct(kV2)}},
              {group.add(g, h), {unit_oct(kV3)}}};
    }
    case 3: {
      const GroupElement h = param("h");
      const GroupElement h2 = group.add(h, h);
      return {{e, {unit_oct(kE1), unit_oct(kE2)}},
              {h, {unit_oct(kU2), unit_oct(kU3)}},
              {group.neg(h), {unit_oct(kV2), unit_oct(kV3)}},
              {group.neg(h2), {unit_oct(kU1)}},
              {h2, {unit_oct(kV1)}}};
    }
    case 4: {
      const GroupElement g = param("g");
      return {
          {e, {unit_oct(kE1), unit_oct(kE2), unit_oct(kU1), unit_oct(kV1)}},
          {g, {unit_oct(kU2), unit_oct(kV3)}},
          {group.neg(g), {unit_oct(kU3), unit_oct(kV2)}}};
    }
    case 5: {
      const GroupElement g = param("g");
      return {{e, {unit_oct(kE1), unit_oct(kE2)}},
              {g, {unit_oct(kU1), unit_oct(kU2), unit_oct(kU3)}},
              {group.neg(g), {unit_oct(kV1), unit_oct(kV2), unit_oct(kV3)}}};
    }
    case 6: {
      const GroupElement g = param("g");
      return {{e, {unit_oct(kE1), unit_oct(kE2)}},
              {g, {unit_oct(kU1), unit_oct(kU2)}},
              {group.neg(g), {unit_oct(kV1), unit_oct(kV2)}},
              {group.add(g, g), {unit_oct(kU3), unit_oct(kV3)}}};
    }
    case 7: {
      const GroupElement g = param("g");
      return {
          {e, {unit_oct(kE1), unit_oct(kE2), unit_oct(kU1), unit_oct(kV1)}},
          {g,
           {unit_oct(kU2), unit_oct(kV2), unit_oct(kU3), unit_oct(kV3)}}};
    }
    case 8: {
      const GroupElement g = param("g"), h = param("h");
      return {{e, {unit_oct(kE1), unit_oct(kE2)}},
              {g, {unit_oct(kU1), unit_oct(kV1)}},
              {h, {unit_oct(kU2), unit_oct(kV2)}},
              {group.add(g, h), {unit_oct(kU3), unit_oct(kV3)}}};
    }
    case 9: {
      const GroupElement g = param("g"), h = param("h"), k = param("k");
      return {{e, {sum_oct(kE1, kE2)}},
              {h, {diff_oct(kE2, kE1)}},
              {g, {diff_oct(kV1, kU1)}},
              {k, {diff_oct(kV2, kU2)}},
              {group.add(g, h), {sum_oct(kU1, kV1)}},
              {group.add(h, k), {sum_oct(kU2, kV2)}},
              {group.add(g, k), {diff_oct(kV3, kU3)}},
              {group.add(group.add(g, h), k), {sum_oct(kU3, kV3)}}};
    }
    default:
      throw std::invalid_argument("grading type must be between 1 and 9");
  }
}

}  // namespace

std::vector<std::string> descriptor_param_names(int type) {
  switch (type) {
    case 1:
    case 2:
    case 8:
      return {"g", "h"};
    case 3:
      return {"h"};
    case 4:
    case 5:
    case 6:
    case 7:
      return {"g"};
    case 9:
      return {"g", "h", "k"};
    default:
      throw std::invalid_argument("grading type must be between 1 and 9");
  }
}

void check_descriptor(const AbelianGroup& group, const GradingDescriptor& d) {
  const auto names = descriptor_param_names(d.type);
  const std::string prefix = "type " + std::to_string(d.type) + ": ";
  for (const auto& name : names)
    if (!d.params.count(name))
      throw std::invalid_argument(prefix + "missing parameter '" + name + "'");
  if (d.params.size() != names.size())
    throw std::invalid_argument(prefix + "unexpected extra parameters");
  for (const auto& [name, value] : d.params)
    if (!group.is_element(value))
      throw std::invalid_argument(prefix + "parameter '" + name + "' = " +
                                  element_str(value) +
                                  " is not an element of the group");

  auto order_of = [&](const char* name) {
    return group.element_order(d.params.at(name));
  };
  auto require_order = [&](const char* name, long wanted) {
    if (order_of(name) != wanted)
      throw std::invalid_argument(prefix + "parameter '" + name +
                                  "' must have order " +
                                  std::to_string(wanted) + ", got " +
                                  std::to_string(order_of(name)));
  };
  switch (d.type) {
    case 1:
      require_order("h", 2);
      if (order_of("g") <= 2)
        throw std::invalid_argument(
            prefix + "parameter 'g' must have order greater than 2");
      break;
    case 2:
      break;  // covered by label distinctness below
    case 3:
      if (order_of("h") <= 4)
        throw std::invalid_argument(
            prefix + "parameter 'h' must have order greater than 4");
      break;
    case 4:
      if (order_of("g") <= 2)
        throw std::invalid_argument(
            prefix + "parameter 'g' must have order greater than 2");
      break;
    case 5:
      require_order("g", 3);
      break;
    case 6:
      require_order("g", 4);
      break;
    case 7:
      require_order("g", 2);
      break;
    case 8:
      require_order("g", 2);
      require_order("h", 2);
      break;
    case 9:
      require_order("g", 2);
      require_order("h", 2);
      require_order("k", 2);
      break;
    default:
      throw std::invalid_argument("grading type must be between 1 and 9");
  }

  const auto spans = descriptor_spans(group, d);
  std::set<GroupElement> seen;
  for (const auto& entry : spans)
    if (!seen.insert(entry.label).second)
      throw std::invalid_argument(prefix + "component labels collide at " +
                                  element_str(entry.label));

  std::vector<GroupElement> gens;
  for (const auto& [name, value] : d.params) gens.push_back(value);
  if (!group.generates(gens))
    throw std::invalid_argument(prefix +
                                "parameters must generate the grading group");
}

std::map<GroupElement, size_t> descriptor_dims(const AbelianGroup& group,
                                               const GradingDescriptor& d) {
  check_descriptor(group, d);
  std::map<GroupElement, size_t> out;
  for (const auto& entry : descriptor_spans(group, d))
    out[entry.label] = entry.vectors.size();
  return out;
}

Grading canonical_c_grading(const AbelianGroup& group,
                            const GradingDescriptor& d) {
  check_descriptor(group, d);
  Grading g;
  g.group = group;
  g.ambient = Ambient::Octonion;
  const auto spans = descriptor_spans(group, d);
  for (const auto& entry : spans) {
    auto [it, inserted] = g.components.emplace(
        entry.label, Subspace::span(kOctDim, entry.vectors));
    if (!inserted)
      throw std::logic_error("canonical component labels collide");
  }
  if (g.total_dim() != kOctDim)
    throw std::logic_error("canonical components do not sum to dimension 8");
  return g;
}

std::array<GroupElement, 3> elementary_tuple(const AbelianGroup& group,
                                             const GradingDescriptor& d) {
  check_descriptor(group, d);
  const GroupElement e = group.identity();
  auto param = [&](const char* name) { return d.params.at(name); };
  switch (d.type) {
    case 1: {
      const GroupElement g = param("g"), h = param("h");
      return {g, group.add(group.neg(g), h), h};
    }
    case 2: {
      const GroupElement g = param("g"), h = param("h");
      return {g, h, group.neg(group.add(g, h))};
    }
    case 3: {
      const GroupElement h = param("h");
      return {group.neg(group.add(h, h)), h, h};
    }
    case 4: {
      const GroupElement g = param("g");
      return {e, g, group.neg(g)};
    }
    case 5: {
      const GroupElement g = param("g");
      return {g, g, g};
    }
    case 6: {
      const GroupElement g = param("g");
      return {g, g, group.add(g, g)};
    }
    case 7: {
      const GroupElement g = param("g");
      return {e, g, g};
    }
    case 8: {
      const GroupElement g = param("g"), h = param("h");
      return {g, h, group.add(g, h)};
    }
    default:
      throw std::invalid_argument(
          "no elementary degree triple for type " + std::to_string(d.type));
  }
}

Grading induce_on_L(const Grading& c) {
  if (c.ambient != Ambient::Octonion)
    throw std::invalid_argument(
        "induce_on_L expects a grading of the octonion algebra");
  const VerifyReport check = verify_grading(c);
  if (!check.ok)
    throw std::invalid_argument("input grading fails verification: " +
                                check.failure->reason);

  const auto& basis = derivation_space();

  // Images of each component basis vector under each basis derivation.
  struct SourceImages {
    GroupElement label;
    std::vector<std::array<Vec, kDerDim>> per_vector;
  };
  std::vector<SourceImages> sources;
  for (const auto& [label, comp] : c.components) {
    SourceImages src;
    src.label = label;
    for (const auto& z : comp.basis_vectors()) {
      std::array<Vec, kDerDim> images;
      for (size_t k = 0; k < kDerDim; ++k)
        images[k] = mat_vec(basis.elements()[k], z);
      src.per_vector.push_back(std::move(images));
    }
    sources.push_back(std::move(src));
  }

  Grading out;
  out.group = c.group;
  out.ambient = Ambient::Derivations;
  size_t total = 0;
  for (const auto& delta : c.group.elements()) {
    // A derivation of degree delta maps each component into the component
    // at the shifted label; collect the annihilator constraints.
    std::vector<Vec> rows;
    for (const auto& src : sources) {
      const Subspace target =
          c.component(c.group.add(delta, src.label));
      const Matrix ann = target.annihilator();
      if (ann.rows() == 0) continue;
      for (const auto& images : src.per_vector)
        for (size_t r = 0; r < ann.rows(); ++r) {
          Vec row(kDerDim, Cyc::zero());
          const Vec a = ann.row(r);
          for (size_t k = 0; k < kDerDim; ++k) row[k] = vec_dot(a, images[k]);
          rows.push_back(std::move(row));
        }
    }
    const Subspace piece =
        Subspace::span(kDerDim, nullspace(Matrix::from_rows(
                                    rows.empty() ? std::vector<Vec>{Vec(
                                                       kDerDim, Cyc::zero())}
                                                 : rows)));
    if (piece.dim() == 0) continue;
    out.components.emplace(delta, piece);
    total += piece.dim();
  }
  if (total != kDerDim)
    throw std::runtime_error(
        "induced components do not exhaust the derivation algebra (got " +
        std::to_string(total) + " of 14 dimensions)");
  return out;
}

namespace {

void bucket_derivation(const AbelianGroup& group,
                       std::map<GroupElement, std::vector<Vec>>& buckets,
                       const GroupElement& label, const Matrix& d) {
  group.require_element(label);
  buckets[label].push_back(derivation_space().coordinates(d));
}

Grading grading_from_buckets(const AbelianGroup& group,
                             std::map<GroupElement, std::vector<Vec>> buckets) {
  Grading out;
  out.group = group;
  out.ambient = Ambient::Derivations;
  size_t total = 0;
  for (auto& [label, vectors] : buckets) {
    Subspace comp = Subspace::span(kDerDim, vectors);
    if (comp.dim() != vectors.size())
      throw std::logic_error("derivations assigned to label " +
                             element_str(label) + " are dependent");
    total += comp.dim();
    out.components.emplace(label, std::move(comp));
  }
  if (total != kDerDim)
    throw std::logic_error("assembled derivation components do not sum to 14");
  return out;
}

}  // namespace

Grading elementary_L_grading(const AbelianGroup& group,
                             const std::array<GroupElement, 3>& degrees) {
  GroupElement sum = group.identity();
  for (const auto& t : degrees) {
    group.require_element(t);
    sum = group.add(sum, t);
  }
  if (sum != group.identity())
    throw std::invalid_argument(
        "degree triple must multiply to the identity");

  std::map<GroupElement, std::vector<Vec>> buckets;
  const GroupElement e = group.identity();
  bucket_derivation(group, buckets, e,
                    sl3_derivation(unit3(0, 0) - unit3(1, 1)));
  bucket_derivation(group, buckets, e,
                    sl3_derivation(unit3(1, 1) - unit3(2, 2)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      // The derivation moving u_i to u_j shifts degrees by t_j - t_i.
      bucket_derivation(group, buckets,
                        group.sub(degrees[j], degrees[i]),
                        sl3_derivation(unit3(i, j)));
    }
  for (int i = 0; i < 3; ++i) {
    bucket_derivation(
        group, buckets, degrees[i],
        inner_derivation(Oct::basis(kE1), Oct::basis(kU1 + i)));
    bucket_derivation(
        group, buckets, group.neg(degrees[i]),
        inner_derivation(Oct::basis(kE2), Oct::basis(kV1 + i)));
  }

  Grading out;
  out.group = group;
  out.ambient = Ambient::Derivations;
  size_t total = 0;
  for (auto& [label, vectors] : buckets) {
    Subspace comp = Subspace::span(kDerDim, vectors);
    total += comp.dim();
    out.components.emplace(label, std::move(comp));
  }
  if (total != kDerDim)
    throw std::logic_error(
        "elementary derivation components do not sum to 14");
  return out;
}

Grading type9_L_grading(const AbelianGroup& group, const GroupElement& g,
                        const GroupElement& h, const GroupElement& k) {
  GradingDescriptor d;
  d.type = 9;
  d.params = {{"g", g}, {"h", h}, {"k", k}};
  check_descriptor(group, d);

  auto mixed = [&](int i, int sign) {
    // -D(e1,u_i) + D(e2,v_i) for sign -1; the sum for sign +1.
    const Matrix a =
        inner_derivation(Oct::basis(kE1), Oct::basis(kU1 + i));
    const Matrix b =
        inner_derivation(Oct::basis(kE2), Oct::basis(kV1 + i));
    return sign < 0 ? b - a : a + b;
  };
  auto rot = [&](int i, int j, int sign) {
    Matrix t = unit3(i, j);
    if (sign < 0)
      t -= unit3(j, i);
    else
      t += unit3(j, i);
    return sl3_derivation(t);
  };

  const GroupElement gh = group.add(g, h);
  const GroupElement hk = group.add(h, k);
  const GroupElement gk = group.add(g, k);
  const GroupElement ghk = group.add(gh, k);

  std::map<GroupElement, std::vector<Vec>> buckets;
  bucket_derivation(group, buckets, h,
                    sl3_derivation(unit3(0, 0) - unit3(1, 1)));
  bucket_derivation(group, buckets, h,
                    sl3_derivation(unit3(0, 0) - unit3(2, 2)));
  bucket_derivation(group, buckets, g, mixed(0, -1));
  bucket_derivation(group, buckets, g, rot(1, 2, -1));
  bucket_derivation(group, buckets, k, mixed(1, -1));
  bucket_derivation(group, buckets, k, rot(0, 2, -1));
  bucket_derivation(group, buckets, gh, mixed(0, +1));
  bucket_derivation(group, buckets, gh, rot(1, 2, +1));
  bucket_derivation(group, buckets, hk, mixed(1, +1));
  bucket_derivation(group, buckets, hk, rot(0, 2, +1));
  bucket_derivation(group, buckets, gk, mixed(2, -1));
  bucket_derivation(group, buckets, gk, rot(0, 1, -1));
  bucket_derivation(group, buckets, ghk, mixed(2, +1));
  bucket_derivation(group, buckets, ghk, rot(0, 1, +1));

  return grading_from_buckets(group, std::move(buckets));
}

Matrix character_automorphism(const Grading& g, const Character& chi) {
  const size_t n = ambient_dim(g.ambient);
  Matrix base_cols(n, n);
  Matrix scaled_cols(n, n);
  size_t col = 0;
  for (const auto& [label, comp] : g.components) {
    const Cyc value = char_eval(g.group, chi, label);
    for (const auto& b : comp.basis_vectors()) {
      if (col >= n)
        throw std::invalid_argument(
            "grading components exceed the ambient dimension");
      for (size_t r = 0; r < n; ++r) {
        base_cols.at(r, col) = b[r];
        scaled_cols.at(r, col) = value * b[r];
      }
      ++col;
    }
  }
  if (col != n)
    throw std::invalid_argument(
        "grading components do not span the ambient space");
  return scaled_cols * base_cols.inverse();
}

Grading grading_from_action(const AbelianGroup& group, Ambient amb,
                            const std::map<Character, Matrix>& action) {
  const size_t n = ambient_dim(amb);
  const auto chars = characters(group);
  if (action.size() != chars.size())
    throw std::invalid_argument(
        "action must assign one matrix to each of the " +
        std::to_string(chars.size()) + " characters");
  for (const auto& chi : chars)
    if (!action.count(chi))
      throw std::invalid_argument("action is missing the character " +
                                  element_str(chi.exponents));
  for (const auto& [chi, m] : action)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("character matrices must be " +
                                  std::to_string(n) + "x" +
                                  std::to_string(n));

  const Character trivial{std::vector<int>(group.num_factors(), 0)};
  if (action.at(trivial) != Matrix::identity(n))
    throw std::invalid_argument(
        "the trivial character must act as the identity");

  // Dual-group generators; every other character is a product of them, so
  // homomorphism and automorphism checks on generators cover the whole map.
  std::vector<Character> gens;
  for (size_t i = 0; i < group.num_factors(); ++i) {
    Character gen{std::vector<int>(group.num_factors(), 0)};
    gen.exponents[i] = 1;
    gens.push_back(std::move(gen));
  }

  for (const auto& gen : gens) {
    const Matrix& a = action.at(gen);
    for (const auto& psi : chars)
      if (action.at(char_product(group, gen, psi)) != a * action.at(psi))
        throw std::invalid_argument(
            "character action is not multiplicative at the pair " +
            element_str(gen.exponents) + ", " + element_str(psi.exponents));
    for (size_t i = 0; i < n; ++i) {
      Vec ei(n, Cyc::zero());
      ei[i] = Cyc::one();
      const Vec ai = mat_vec(a, ei);
      for (size_t j = 0; j < n; ++j) {
        Vec ej(n, Cyc::zero());
        ej[j] = Cyc::one();
        const Vec lhs = mat_vec(a, graded_product(amb, ei, ej));
        const Vec rhs = graded_product(amb, ai, mat_vec(a, ej));
        if (lhs != rhs)
          throw std::invalid_argument(
              "character matrix for " + element_str(gen.exponents) +
              " is not an algebra automorphism (fails on basis pair " +
              std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  Grading out;
  out.group = group;
  out.ambient = amb;
  size_t total = 0;
  for (const auto& gamma : group.elements()) {
    // Joint eigenspace: A_gen v = gen(gamma) v for every dual generator.
    std::vector<Vec> rows;
    for (const auto& gen : gens) {
      const Cyc value = char_eval(group, gen, gamma);
      Matrix shifted = action.at(gen);
      for (size_t i = 0; i < n; ++i) shifted.at(i, i) -= value;
      for (const auto& row : shifted.row_list()) rows.push_back(row);
    }
    Subspace piece =
        rows.empty()
            ? Subspace::full(n)
            : Subspace::span(n, nullspace(Matrix::from_rows(rows)));
    if (piece.dim() == 0) continue;
    total += piece.dim();
    out.components.emplace(gamma, std::move(piece));
  }
  if (total != n)
    throw std::logic_error(
        "joint eigenspaces do not decompose the algebra (got " +
        std::to_string(total) + " of " + std::to_string(n) + " dimensions)");
  return out;
}

Grading relabel(const Grading& g, const GroupAutomorphism& sigma) {
  Grading out;
  out.group = g.group;
  out.ambient = g.ambient;
  for (const auto& [label, comp] : g.components) {
    auto [it, inserted] =
        out.components.emplace(sigma.apply(g.group, label), comp);
    if (!inserted)
      throw std::invalid_argument("relabeling map is not injective");
  }
  return out;
}

}  // namespace g2grad
