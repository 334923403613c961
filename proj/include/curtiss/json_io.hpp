#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "curtiss/factor_spec.hpp"
#include "curtiss/multiplier.hpp"

namespace curtiss {

// {"quad":[{"t":"num/den","r":"num/den"}...],
//  "angles":[{"num":7,"den":24,"r":"1"}...],
//  "linear":[{"p":"10000"}...]}
FactorSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const FactorSpec& spec);

// {"coeffs":["10","-2","10","-1","1"]} ascending order.
Polynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::json polynomial_to_json(const Polynomial& f);

// {"s":..., "feasible":..., "g":{"coeffs":[...]}, "farkas":[...]}
nlohmann::json outcome_to_json(const FeasibilityOutcome& outcome);

}  // namespace curtiss
