#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "symspace/duality.hpp"
#include "symspace/stone.hpp"

namespace symspace {

using Json = nlohmann::json;

// Wire formats. Rationals travel as "p/q" strings with an "inf" sentinel for
// infinite masses and lengths; emitted documents re-parse to equal values.

Json step_to_json(const StepFunction& f);
StepFunction step_from_json(const Json& j);

Json profile_to_json(const DecreasingProfile& xi);
DecreasingProfile profile_from_json(const Json& j);

Json threshold_profile_to_json(const ThresholdProfile& eta);
ThresholdProfile threshold_profile_from_json(const Json& j);

Json norm_spec_to_json(const NormSpec& spec);
NormSpec norm_spec_from_json(const Json& j);
// Accepts either the JSON object or compact text such as "Lp:3/2", "LInf".
NormSpec norm_spec_from_string(const std::string& text);

Json norm_value_to_json(const NormValue& v);

Json transport_map_to_json(const TransportMap& map);
TransportMap transport_map_from_json(const Json& j);

Json mask_to_json(Mask m);

struct StoneInput {
  int ground_size = 0;
  std::vector<Mask> generators;
};
StoneInput stone_input_from_json(const Json& j);
Json stone_report_to_json(const FiniteBooleanAlgebra& alg);

// FNV-1a digest of a canonical serialization, for run manifests.
std::string digest(const std::string& payload);

}  // namespace symspace
