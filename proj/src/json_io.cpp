#include "curtiss/json_io.hpp"

#include <nlohmann/json.hpp>

namespace curtiss {

using nlohmann::json;

FactorSpec spec_from_json(const json& j) {
    FactorSpec spec;
    if (j.contains("quad"))
        for (const auto& q : j.at("quad"))
            spec.quad_factors.push_back({parse_rational(q.at("t").get<std::string>()),
                                         parse_rational(q.at("r").get<std::string>())});
    if (j.contains("angles"))
        for (const auto& a : j.at("angles"))
            spec.angle_factors.push_back({a.at("num").get<long>(), a.at("den").get<long>(),
                                          parse_rational(a.at("r").get<std::string>())});
    if (j.contains("linear"))
        for (const auto& l : j.at("linear"))
            spec.linear_factors.push_back({parse_rational(l.at("p").get<std::string>())});
    spec.validate();
    return spec;
}

json spec_to_json(const FactorSpec& spec) {
    json j = json::object();
    j["quad"] = json::array();
    for (const auto& q : spec.quad_factors)
        j["quad"].push_back({{"t", to_string(q.cosine_t)}, {"r", to_string(q.radius_r)}});
    j["angles"] = json::array();
    for (const auto& a : spec.angle_factors)
        j["angles"].push_back(
            {{"num", a.angle_num}, {"den", a.angle_den}, {"r", to_string(a.radius_r)}});
    j["linear"] = json::array();
    for (const auto& l : spec.linear_factors) j["linear"].push_back({{"p", to_string(l.p)}});
    return j;
}

Polynomial polynomial_from_json(const json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Polynomial(std::move(coeffs));
}

json polynomial_to_json(const Polynomial& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
    return json{{"coeffs", coeffs}};
}

json outcome_to_json(const FeasibilityOutcome& outcome) {
    json j;
    j["s"] = outcome.s;
    j["feasible"] = outcome.feasible;
    if (outcome.multiplier_g) j["g"] = polynomial_to_json(*outcome.multiplier_g);
    if (outcome.farkas_y) {
        json y = json::array();
        for (const auto& v : *outcome.farkas_y) y.push_back(to_string(v));
        j["farkas"] = y;
    }
    return j;
}

}  // namespace curtiss
