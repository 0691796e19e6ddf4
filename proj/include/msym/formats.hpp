#pragma once

#include <string>

#include <json.hpp>

#include "msym/present.hpp"
#include "msym/relations.hpp"

namespace msym {

using nlohmann::json;

json curve_json(const Curve& curve);
std::string curve_text(const Curve& curve);

json quotient_json(const QuotientTree& tree, int ray_depth);
std::string quotient_text(const QuotientTree& tree, int ray_depth);

json vertex_json(const TVertex& v);
json path_json(const SymbolPath& path);
json class_json(const std::optional<ReducedClass>& cls);

json certificate_json(const Certificate& cert);
/// Throws ParseError on schema violations.
Certificate certificate_from_json(const json& j);

json stages_json(const std::vector<StageMetric>& stages);
json interaction_json(const InteractionReport& rep);

json presentation_json(const Presentation& p);
std::string presentation_text(const Presentation& p);

}  // namespace msym
