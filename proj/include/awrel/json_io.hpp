#ifndef AWREL_JSON_IO_HPP
#define AWREL_JSON_IO_HPP

#include <json.hpp>

#include "awrel/families.hpp"
#include "awrel/matrix.hpp"
#include "awrel/parameter_array.hpp"
#include "awrel/relations.hpp"

namespace awrel {

using nlohmann::json;

// Scalars serialize as "p/q" strings when real and as {"re", "im"} objects
// otherwise; parsing an object form requires the Gaussian field.
json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const json& j, Field field);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, Field field);

json array_to_json(const ParameterArray& pa);
ParameterArray array_from_json(const json& j, Field field);

json coefficients_to_json(const AwCoefficients& k);
AwCoefficients coefficients_from_json(const json& j, Field field);

json map_to_json(const AffineMap& m);
AffineMap map_from_json(const json& j, Field field);

json spec_to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const json& j, Field field);

json violations_to_json(const std::vector<Violation>& violations);
json normalization_to_json(const NormalizationResult& result);
json classification_to_json(const Classification& c);

// Serialized text with a trailing newline; indent 2 when pretty.
std::string dump_json(const json& j, bool pretty);

Field field_from_name(const std::string& name);

}  // namespace awrel

#endif
