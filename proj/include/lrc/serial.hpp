#pragma once

#include <nlohmann/json.hpp>

#include "lrc/analysis.hpp"

namespace lrc {

using json = nlohmann::json;

// JSON is the canonical interchange form; integer element codes throughout.
// Field: {"p":3,"s":3,"modulus":[1,2,0,1],"generator":3}
// Poly:  list of codes, low-to-high
// Cert:  {"field":...,"g":[...],"sets":[[...]],"constants":[...],
//         "roots":[...],"split":{"g1":[...],"g2":[...]}}   (split optional)

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldPtr& f, const json& j);

json cert_to_json(const GoodPolyCert& cert, bool with_field = true);
GoodPolyCert cert_from_json(const json& j, FieldPtr field = nullptr);

json instance_to_json(const CodeInstance& inst);
/// Rebuilds the instance from its parameters and verifies the stored matrix
/// and groups agree with the reconstruction.
CodeInstance instance_from_json(const json& j);

json distance_report_to_json(const DistanceReport& rep);
json locality_report_to_json(const LocalityReport& rep);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace lrc
