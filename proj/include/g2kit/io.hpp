#pragma once

// JSON bundles (schema "g2kit/1"). A bundle file holds one object
//   {"schema": "g2kit/1", "kind": K, ...payload}
// with K one of lie2, crossed, algebroid, poisson, action. Rationals are
// strings "p/q" (or JSON integers); floats are rejected.
//
// Polynomials: {"monomials": [{"exps": {"x1": 2, "xi1": 1}, "coef": "1/2"}]},
// or a bare rational for a constant.

#include <g2kit/action.hpp>
#include <g2kit/lie2.hpp>

#include <json.hpp>

#include <string>
#include <variant>

namespace g2kit {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "g2kit/1";

Json poly_to_json(const GradedPoly& p);
Json lie2_to_json(const StrictLie2Data& l);
Json crossed_to_json(const CrossedModuleData& c);
Json algebroid_to_json(const LieAlgebroidData& a);
Json action_to_json(const StrictActionData& s);
Json report_to_json(const Report& r);

// Readers throw InputError naming the offending field, e.g. "$.c[2].poly".
GradedPoly poly_from_json(const Json& j, const ContextPtr& ctx, const std::string& path = "$");
StrictLie2Data lie2_from_json(const Json& j, const std::string& path = "$");
CrossedModuleData crossed_from_json(const Json& j, const std::string& path = "$");
LieAlgebroidData algebroid_from_json(const Json& j, const std::string& path = "$");
/// {"dim": n, "pi": [{"i","j","poly"}]} with i < j; yields the cotangent algebroid.
LieAlgebroidData poisson_from_json(const Json& j, const std::string& path = "$");
StrictActionData action_from_json(const Json& j, const std::string& path = "$");
Report report_from_json(const Json& j, const std::string& path = "$");

using BundleData = std::variant<StrictLie2Data, CrossedModuleData, LieAlgebroidData, StrictActionData>;

struct Bundle {
  std::string kind;
  BundleData data;
};

/// Indented JSON in which every value that fits in `width` columns stays on one line.
std::string format_json(const Json& j, std::size_t width = 100);

/// Wraps a payload with schema and kind.
Json bundle_to_json(const std::string& kind, Json payload);
Bundle bundle_from_json(const Json& j);
/// Syntax errors report line and column; shape errors report the field path.
Bundle parse_bundle_text(const std::string& text, const std::string& source = "<string>");
Bundle parse_bundle(const std::string& path);

/// Parses a JSON report document, with line and column on syntax errors.
Report parse_report_text(const std::string& text);

}  // namespace g2kit
