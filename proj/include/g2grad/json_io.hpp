#pragma once

#include <json.hpp>

#include "g2grad/classify.hpp"
#include "g2grad/grading.hpp"
#include "g2grad/selfcheck.hpp"

namespace g2grad {

/// Insertion-ordered JSON so emitted documents keep a stable field layout.
using Json = nlohmann::ordered_json;

Json group_to_json(const AbelianGroup& g);
/// Expects {"factors": [f1, ...]}; throws std::invalid_argument on
/// malformed structure.
AbelianGroup group_from_json(const Json& j);

Json element_to_json(const GroupElement& e);
GroupElement element_from_json(const Json& j, const AbelianGroup& group);

/// Scalars are serialized as strings: "p/q", "p", or "cyc(N):c0,c1,...".
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"group": ..., "ambient": "octonion"|"g2",
///  "components": [{"label": [...], "basis": [[...], ...]}, ...]}
/// plus an optional "descriptor" block when one is supplied.
Json grading_to_json(const Grading& g,
                     const GradingDescriptor* descriptor = nullptr);
/// Accepts arbitrary spanning sets in "basis"; components are normalized
/// to canonical form. A "descriptor" block, if present, is ignored.
Grading grading_from_json(const Json& j);

Json descriptor_to_json(const GradingDescriptor& d);
GradingDescriptor descriptor_from_json(const Json& j);

Json verify_report_to_json(const VerifyReport& r);
Json classification_to_json(const Classification& c);
Json iso_result_to_json(const IsoResult& r);
Json selfcheck_to_json(const SelfCheckReport& r);

}  // namespace g2grad
