#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <string>

#include "canonical.hpp"
#include "coefficient_map.hpp"
#include "error.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "trees.hpp"

namespace treealg {

using json = nlohmann::json;

inline json tree_to_json(const labeled_tree& t) {
    json parent = json::object();
    for (label v = 0; v < t.size(); ++v)
        if (v != t.root()) parent[std::to_string(v)] = t.parent_of(v);
    return json{{"n", t.size()}, {"root", t.root()}, {"parent", parent}};
}

inline labeled_tree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("root") || !j.contains("parent") ||
        !j["n"].is_number_integer() || !j["root"].is_number_integer() || !j["parent"].is_object())
        fail("SyntaxError", "tree object needs integer 'n', integer 'root' and object 'parent'");
    std::map<label, label> parent;
    for (const auto& [key, value] : j["parent"].items()) {
        if (!value.is_number_integer()) fail("SyntaxError", "parent entries must be integers");
        try {
            parent[std::stoi(key)] = value.get<label>();
        } catch (const std::exception&) {
            fail("SyntaxError", "parent keys must be integer labels");
        }
    }
    return labeled_tree::build(j["n"].get<int>(), j["root"].get<label>(), parent);
}

inline json coefficient_map_to_json(const coefficient_map& m) {
    json coeffs = json::object();
    for (const auto& [t, v] : m.coeffs()) coeffs[print_unlabeled(t)] = format_rational(v);
    return json{{"order", m.order()}, {"empty", format_rational(m.empty_coeff())}, {"coeffs", coeffs}};
}

// Accepts sparse coefficient objects (missing classes read as zero) but
// rejects keys that are not classes within the stated order.
inline coefficient_map coefficient_map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("empty") || !j.contains("coeffs") ||
        !j["order"].is_number_integer() || !j["empty"].is_string() || !j["coeffs"].is_object())
        fail("SyntaxError", "coefficient map needs integer 'order', string 'empty' and object 'coeffs'");
    coefficient_map m(j["order"].get<int>(), parse_rational(j["empty"].get<std::string>()));
    for (const auto& [key, value] : j["coeffs"].items()) {
        if (!value.is_string()) fail("SyntaxError", "coefficients must be rational strings");
        m.set(parse_unlabeled(key), parse_rational(value.get<std::string>()));
    }
    return m;
}

inline json series_to_json(const truncated_series& s) {
    json coeffs = json::array();
    for (const rational& c : s.coeffs()) coeffs.push_back(format_rational(c));
    return json{{"order", s.order()}, {"coefficients", coeffs}};
}

}  // namespace treealg
