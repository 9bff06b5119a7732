#pragma once

#include <json.hpp>

#include "equilin/oracle.hpp"
#include "equilin/schur.hpp"

namespace equilin {

using nlohmann::json;

// Vectors are JSON arrays, matrices row-major nested arrays, permutations
// arrays of images.

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

json perm_to_json(const Permutation& p);
Permutation perm_from_json(const json& j);

json spec_to_json(const ActionSpec& spec);
ActionSpec spec_from_json(const json& j);

json label_to_json(const IsoClassLabel& label);
IsoClassLabel label_from_json(const json& j);

json coeffs_to_json(const SchurCoefficients& coeffs);
SchurCoefficients coeffs_from_json(const json& j);

json weightspace_to_json(const WeightSpacePoint& v);
WeightSpacePoint weightspace_from_json(const json& j);

json report_to_json(const EquivarianceReport& r);

}  // namespace equilin
