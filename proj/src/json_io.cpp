#include "g2grad/json_io.hpp"

#include <stdexcept>

namespace g2grad {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("malformed JSON: " + what);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json group_to_json(const AbelianGroup& g) {
  return Json{{"factors", g.factors()}};
}

AbelianGroup group_from_json(const Json& j) {
  const Json& factors = field(j, "factors");
  if (!factors.is_array()) bad("'factors' must be an array");
  std::vector<int> out;
  for (const auto& f : factors) {
    if (!f.is_number_integer()) bad("group factors must be integers");
    out.push_back(f.get<int>());
  }
  return AbelianGroup(out);
}

Json element_to_json(const GroupElement& e) { return Json(e); }

GroupElement element_from_json(const Json& j, const AbelianGroup& group) {
  if (!j.is_array()) bad("group element must be an array of residues");
  GroupElement e;
  for (const auto& r : j) {
    if (!r.is_number_integer()) bad("group element residues must be integers");
    e.push_back(r.get<int>());
  }
  group.require_element(e);
  return e;
}

namespace {

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) bad("coordinate vector must be an array");
  Vec v;
  for (const auto& c : j) {
    if (!c.is_string()) bad("scalars must be strings like \"1/2\"");
    v.push_back(Cyc::parse(c.get<std::string>()));
  }
  return v;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) bad("matrix rows have ragged sizes");
  return Matrix::from_rows(rows);
}

Json grading_to_json(const Grading& g, const GradingDescriptor* descriptor) {
  Json out;
  out["group"] = group_to_json(g.group);
  out["ambient"] = ambient_name(g.ambient);
  Json comps = Json::array();
  for (const auto& [label, comp] : g.components) {
    Json entry;
    entry["label"] = element_to_json(label);
    Json basis = Json::array();
    for (const auto& row : comp.basis_vectors()) basis.push_back(vec_to_json(row));
    entry["basis"] = basis;
    comps.push_back(entry);
  }
  out["components"] = comps;
  if (descriptor) out["descriptor"] = descriptor_to_json(*descriptor);
  return out;
}

Grading grading_from_json(const Json& j) {
  Grading g;
  g.group = group_from_json(field(j, "group"));
  const Json& ambient = field(j, "ambient");
  if (!ambient.is_string()) bad("'ambient' must be a string");
  g.ambient = ambient_from_name(ambient.get<std::string>());
  const size_t n = ambient_dim(g.ambient);

  const Json& comps = field(j, "components");
  if (!comps.is_array()) bad("'components' must be an array");
  for (const auto& entry : comps) {
    const GroupElement label =
        element_from_json(field(entry, "label"), g.group);
    const Json& basis = field(entry, "basis");
    if (!basis.is_array()) bad("component 'basis' must be an array");
    std::vector<Vec> rows;
    for (const auto& r : basis) {
      Vec v = vec_from_json(r);
      if (v.size() != n)
        bad("component basis vector has " + std::to_string(v.size()) +
            " coordinates, expected " + std::to_string(n));
      rows.push_back(std::move(v));
    }
    const Subspace span = Subspace::span(n, rows);
    if (span.dim() == 0)
      bad("component at " + element_str(label) + " spans only zero");
    if (!g.components.emplace(label, span).second)
      bad("duplicate component label " + element_str(label));
  }
  return g;
}

Json descriptor_to_json(const GradingDescriptor& d) {
  Json params;
  for (const auto& [name, value] : d.params)
    params[name] = element_to_json(value);
  return Json{{"type", d.type}, {"params", params}};
}

GradingDescriptor descriptor_from_json(const Json& j) {
  GradingDescriptor d;
  const Json& type = field(j, "type");
  if (!type.is_number_integer()) bad("'type' must be an integer");
  d.type = type.get<int>();
  const Json& params = field(j, "params");
  if (!params.is_object()) bad("'params' must be an object");
  for (const auto& [name, value] : params.items()) {
    if (!value.is_array()) bad("parameter '" + name + "' must be an array");
    GroupElement e;
    for (const auto& r : value) {
      if (!r.is_number_integer()) bad("parameter residues must be integers");
      e.push_back(r.get<int>());
    }
    d.params[name] = e;
  }
  return d;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json out;
  out["ok"] = r.ok;
  out["pairs_checked"] = r.pairs_checked;
  if (r.failure) {
    Json f;
    f["reason"] = r.failure->reason;
    if (r.failure->left) f["left_label"] = element_to_json(*r.failure->left);
    if (r.failure->right)
      f["right_label"] = element_to_json(*r.failure->right);
    if (!r.failure->witness.empty()) f["witness"] = r.failure->witness;
    out["failure"] = f;
  }
  return out;
}

Json classification_to_json(const Classification& c) {
  Json out;
  if (!c.recognized) {
    out["outcome"] = "unrecognized";
    out["reason"] = c.reason;
    return out;
  }
  out["outcome"] = "recognized";
  out["type"] = c.type;
  Json params;
  for (const auto& [name, value] : c.descriptor.params)
    params[name] = element_to_json(value);
  out["params"] = params;
  Json images = Json::array();
  for (const auto& img : c.sigma.images) images.push_back(element_to_json(img));
  out["sigma"] = images;
  return out;
}

Json iso_result_to_json(const IsoResult& r) {
  return Json{{"verdict", verdict_name(r.verdict)}, {"detail", r.detail}};
}

Json selfcheck_to_json(const SelfCheckReport& r) {
  Json out;
  out["ok"] = r.ok;
  out["seed"] = r.seed;
  Json items = Json::array();
  for (const auto& item : r.items)
    items.push_back(
        Json{{"name", item.name}, {"ok", item.ok}, {"detail", item.detail}});
  out["checks"] = items;
  return out;
}

}  // namespace g2grad
