#pragma once

// JSON serialization: group tables, verdicts, reports.

#include <fstream>
#include <string>

#include <json.hpp>

#include "unitlab/algebra.hpp"
#include "unitlab/group.hpp"
#include "unitlab/involutions.hpp"

namespace unitlab {

inline nlohmann::json group_to_json(const FiniteGroup& g) {
    nlohmann::json j;
    j["order"] = g.order;
    j["identity"] = g.identity;
    j["generators"] = g.generators;
    j["mul"] = g.mul;
    if (!g.names.empty()) j["names"] = g.names;
    return j;
}

inline FiniteGroup group_from_json(const nlohmann::json& j) {
    FiniteGroup g;
    g.order = j.at("order").get<int>();
    g.identity = j.at("identity").get<int>();
    g.generators = j.at("generators").get<std::vector<int>>();
    g.mul = j.at("mul").get<std::vector<std::vector<int>>>();
    if (j.contains("names")) g.names = j.at("names").get<std::vector<std::string>>();
    g.inv.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (a < static_cast<int>(g.mul.size()) &&
                b < static_cast<int>(g.mul[a].size()) && g.mul[a][b] == g.identity) {
                g.inv[a] = b;
                break;
            }
    validate_group(g);
    return g;
}

inline FiniteGroup load_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file: " + path);
    nlohmann::json j;
    in >> j;
    return group_from_json(j);
}

inline nlohmann::json verdict_to_json(const Algebra& alg, const std::string& group_name,
                                      const Verdict& v) {
    nlohmann::json j;
    j["group"] = group_name;
    j["field"] = to_string(alg.field());
    j["verdict"] = to_string(v.tag);
    j["kernel_dim"] = v.kernel_dim;
    j["elapsed"] = v.elapsed_seconds;
    if (v.involution_count >= 0) j["involution_count"] = v.involution_count;
    if (v.witness)
        j["witness"] = {alg.to_literal(v.witness->first), alg.to_literal(v.witness->second)};
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline nlohmann::json structural_report_to_json(const StructuralReport& r) {
    return nlohmann::json{{"order", r.order},
                          {"exponent", r.exponent},
                          {"abelian", r.abelian},
                          {"num_involutions", r.num_involutions},
                          {"num_classes", r.num_classes},
                          {"center_order", r.center_order},
                          {"commutator_order", r.commutator_order},
                          {"frattini_order", r.frattini_order},
                          {"omega_order", r.omega_order},
                          {"phi_equals_omega", r.phi_equals_omega},
                          {"omega_central", r.omega_central},
                          {"involutions_central", r.involutions_central},
                          {"commutator_in_omega", r.commutator_in_omega}};
}

}  // namespace unitlab
