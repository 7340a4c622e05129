#pragma once

#include "agl/correspondence.hpp"
#include "agl/finite_set.hpp"
#include "agl/patterns.hpp"
#include "agl/structure.hpp"

#include <json.hpp>

#include <string>

namespace agl {

using Json = nlohmann::json;

// Rationals travel as strings "p/q" (plain "p" for integers).
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Descriptors: "Ga", "Gm", or {"kind":"elliptic","a":"...","b":"..."}.
Json group_to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const Json& j);

// Elements of Ga/Gm are rational strings; elliptic points are
// {"x":"...","y":"..."} or the string "infinity".
Json element_to_json(const GroupElement& e);
GroupElement element_from_json(const GroupDescriptor& g, const Json& j);

Json set_to_json(const FiniteSet& s);
FiniteSet set_from_json(const GroupDescriptor& g, const Json& j);

/**
 * Correspondence configs:
 *   {"kind":"graph","phi":"x^2+1","source":"Gm","target":"Ga"}
 *   {"kind":"coordproj","axis":"x","source":{"kind":"elliptic",...}}
 *   {"kind":"squareshift","u":"0","source":"Gm"}
 *   {"kind":"implicit","p":"y^2 - x","source":"Gm","target":"Gm"}
 */
Correspondence correspondence_from_json(const Json& j);

/// Variety configs: {"equations":["x2*x3 - x1 + 1"], "dim":2} with the group
/// and variable count supplied by the caller.
VarietySpec variety_from_json(const Json& j, const GroupDescriptor& group, std::size_t num_vars);

Json pattern_report_to_json(const PatternReport& r);
PatternReport pattern_report_from_json(const Json& j);

} // namespace agl
