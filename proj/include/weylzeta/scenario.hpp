/*
 * scenario.hpp
 * ------------
 * Stratification scenario files: a JSON description of strata with Euler
 * characteristics and local zeta data, standing in for a resolution of
 * singularities. Running a scenario Euler-integrates the local zeta
 * functions and extracts the signed eigenvalue multiplicities in the file's
 * ambient dimension.
 *
 * Schema (version 1):
 *
 *   {
 *     "ambient_dimension": 2,
 *     "name": "example",
 *     "parameters": ["alpha"],
 *     "schema": 1,
 *     "strata": [
 *       {"chi": -1, "local": {...}, "name": "open"}
 *     ]
 *   }
 *
 * Local descriptors: {"type":"trivial"},
 *   {"eigen_exponents": [...], "m": 1, "type": "monomial_local_system"},
 *   {"positive_count": 2, "type": "multi_monomial"},
 *   {"factors": [{"c": "...", "e": -1, "m": 3}], "lead_exponent": "0",
 *    "lead_power": 0, "type": "explicit"}.
 *
 * Exponent strings use the parser's exponent grammar with exact rationals
 * ("-3*alpha + 1/2"). write_scenario emits the canonical form (sorted keys,
 * two-space indent); canonical files round-trip byte for byte.
 */
#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "exponents.hpp"
#include "parse.hpp"
#include "zeta.hpp"

namespace weylzeta {

struct SchemaError : DomainError {
    using DomainError::DomainError;
};

struct ScenarioStratum {
    std::string name;
    long long chi = 0;
    nlohmann::json local;
};

struct Scenario {
    std::string name;
    int ambient_dimension = 1;
    std::vector<std::string> parameters;
    std::vector<ScenarioStratum> strata;
};

struct ScenarioResult {
    ZetaFunction zeta;
    VirtualMultiplicity mu;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw SchemaError("scenario: " + msg);
}

inline ExponentQ scenario_exponent(const std::string& text,
                                   const std::set<std::string>& declared) {
    ExponentQ x;
    try {
        x = parse_exponent(text);
    } catch (const ParseError& e) {
        throw SchemaError(std::string("scenario: bad exponent '") + text + "': " + e.what());
    }
    for (const auto& [name, c] : x.linear())
        require(declared.count(name) > 0, "undeclared parameter '" + name + "'");
    return x;
}

} // namespace detail

inline Scenario read_scenario(const nlohmann::json& j) {
    detail::require(j.is_object(), "top level must be an object");
    detail::require(j.contains("schema") && j["schema"].is_number_integer() &&
                        j["schema"].get<int>() == 1,
                    "unsupported schema version");
    detail::require(j.contains("name") && j["name"].is_string(), "missing name");
    detail::require(j.contains("ambient_dimension") && j["ambient_dimension"].is_number_integer(),
                    "missing ambient_dimension");
    Scenario s;
    s.name = j["name"].get<std::string>();
    s.ambient_dimension = j["ambient_dimension"].get<int>();
    detail::require(s.ambient_dimension >= 1, "ambient_dimension must be >= 1");
    detail::require(j.contains("parameters") && j["parameters"].is_array(), "missing parameters");
    for (const auto& p : j["parameters"]) {
        detail::require(p.is_string(), "parameters must be strings");
        s.parameters.push_back(p.get<std::string>());
    }
    detail::require(j.contains("strata") && j["strata"].is_array(), "missing strata");
    for (const auto& st : j["strata"]) {
        detail::require(st.is_object(), "stratum must be an object");
        detail::require(st.contains("name") && st["name"].is_string(), "stratum missing name");
        detail::require(st.contains("chi") && st["chi"].is_number_integer(),
                        "stratum missing integer chi");
        detail::require(st.contains("local") && st["local"].is_object(),
                        "stratum missing local descriptor");
        s.strata.push_back({st["name"].get<std::string>(), st["chi"].get<long long>(),
                            st["local"]});
    }
    return s;
}

inline Scenario read_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("scenario: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("scenario: invalid JSON: ") + e.what());
    }
    return read_scenario(j);
}

inline ZetaFunction scenario_local_zeta(const nlohmann::json& local,
                                        const std::set<std::string>& declared) {
    detail::require(local.contains("type") && local["type"].is_string(),
                    "local descriptor missing type");
    std::string type = local["type"].get<std::string>();
    if (type == "trivial") return ZetaFunction::one();
    if (type == "monomial_local_system") {
        detail::require(local.contains("m") && local["m"].is_number_integer() &&
                            local["m"].get<int>() >= 1,
                        "monomial_local_system needs m >= 1");
        detail::require(local.contains("eigen_exponents") && local["eigen_exponents"].is_array(),
                        "monomial_local_system needs eigen_exponents");
        std::vector<ExpClass> eigs;
        for (const auto& e : local["eigen_exponents"]) {
            detail::require(e.is_string(), "eigen_exponents must be strings");
            eigs.push_back(ExpClass(detail::scenario_exponent(e.get<std::string>(), declared)));
        }
        return local_system_zeta(1, local["m"].get<int>(), eigs);
    }
    if (type == "multi_monomial") {
        detail::require(local.contains("positive_count") &&
                            local["positive_count"].is_number_integer(),
                        "multi_monomial needs positive_count");
        int count = local["positive_count"].get<int>();
        detail::require(count >= 2, "multi_monomial needs positive_count >= 2");
        return multi_monomial_zeta(count);
    }
    if (type == "explicit") {
        ZetaFunction z;
        if (local.contains("lead_exponent")) {
            detail::require(local["lead_exponent"].is_string(), "lead_exponent must be a string");
            z = ZetaFunction::constant(ExpClass(
                detail::scenario_exponent(local["lead_exponent"].get<std::string>(), declared)));
        }
        if (local.contains("lead_power")) {
            detail::require(local["lead_power"].is_number_integer(),
                            "lead_power must be an integer");
            z *= ZetaFunction::t_power(local["lead_power"].get<long long>());
        }
        detail::require(local.contains("factors") && local["factors"].is_array(),
                        "explicit local zeta needs factors");
        for (const auto& f : local["factors"]) {
            detail::require(f.is_object() && f.contains("c") && f["c"].is_string() &&
                                f.contains("m") && f["m"].is_number_integer() &&
                                f.contains("e") && f["e"].is_number_integer(),
                            "explicit factor needs c, m, e");
            detail::require(f["m"].get<int>() >= 1, "explicit factor needs m >= 1");
            z *= ZetaFunction::factor(
                ExpClass(detail::scenario_exponent(f["c"].get<std::string>(), declared)),
                f["m"].get<int>(), f["e"].get<long long>());
        }
        return z;
    }
    throw SchemaError("scenario: unknown local descriptor type '" + type + "'");
}

inline ScenarioResult run_scenario(const Scenario& s) {
    std::set<std::string> declared(s.parameters.begin(), s.parameters.end());
    std::vector<Stratum> strata;
    for (const auto& st : s.strata)
        strata.push_back({st.name, st.chi, scenario_local_zeta(st.local, declared)});
    ScenarioResult r;
    r.zeta = euler_integral(strata);
    r.mu = multiplicities_from_zeta(r.zeta, s.ambient_dimension);
    return r;
}

inline ScenarioResult run_scenario_file(const std::string& path) {
    return run_scenario(read_scenario_file(path));
}

inline nlohmann::json scenario_to_json(const Scenario& s) {
    nlohmann::json j;
    j["schema"] = 1;
    j["name"] = s.name;
    j["ambient_dimension"] = s.ambient_dimension;
    j["parameters"] = s.parameters;
    j["strata"] = nlohmann::json::array();
    for (const auto& st : s.strata) {
        nlohmann::json e;
        e["name"] = st.name;
        e["chi"] = st.chi;
        e["local"] = st.local;
        j["strata"].push_back(e);
    }
    return j;
}

// Canonical form: nlohmann's sorted object keys, two-space indent, final
// newline.
inline std::string write_scenario(const Scenario& s) {
    return scenario_to_json(s).dump(2) + "\n";
}

} // namespace weylzeta
