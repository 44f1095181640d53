#ifndef PAINLAB_SERIALIZE_HPP
#define PAINLAB_SERIALIZE_HPP

#include <json.hpp>

#include "painlab/potentials.hpp"

namespace painlab {

// Documented JSON form of a potential spec:
//   {"family": "p4", "normalization": "hamiltonian", "quantum": false,
//    "params": {"alpha": 0.3, "beta": 0.7}}
inline nlohmann::ordered_json to_json(const PotentialSpec& s) {
    nlohmann::ordered_json j;
    j["family"] = family_name(s.family);
    j["normalization"] = (s.norm == Norm::Hamiltonian) ? "hamiltonian" : "classification";
    j["quantum"] = s.quantum;
    nlohmann::ordered_json params;
    for (const auto& [k, v] : s.params) params[k] = v;
    j["params"] = params;
    return j;
}

inline PotentialSpec spec_from_json(const nlohmann::ordered_json& j) {
    PotentialSpec s;
    s.family = family_from_name(j.at("family").get<std::string>());
    const std::string norm = j.value("normalization", "classification");
    if (norm == "hamiltonian")
        s.norm = Norm::Hamiltonian;
    else if (norm == "classification")
        s.norm = Norm::Classification;
    else
        throw unknown_family_error("unknown normalization: " + norm);
    s.quantum = j.value("quantum", false);
    if (j.contains("params"))
        for (const auto& [k, v] : j.at("params").items()) s.params[k] = v.get<double>();
    return s;
}

} // namespace painlab

#endif
