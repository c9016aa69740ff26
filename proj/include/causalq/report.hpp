#pragma once

// Verdict aggregation and deterministic rendering. JSON output is canonical:
// keys sorted, floats printed with 12 significant digits, no locale or
// timestamp dependence, so equal configurations emit identical bytes.

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace causalq::report {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

/// Named tolerances shared across the suites, overridable per run.
struct Tolerances {
    double state_equality = 1e-9;
    double invariant = 1e-10;
    double popt_floor = -1e-9;

    void set(const std::string& name, double value) {
        if (name == "state_equality") {
            state_equality = value;
        } else if (name == "invariant") {
            invariant = value;
        } else if (name == "popt_floor") {
            popt_floor = value;
        } else {
            throw std::invalid_argument("unknown tolerance name \"" + name + "\"");
        }
    }

    json to_json() const {
        return {{"state_equality", state_equality},
                {"invariant", invariant},
                {"popt_floor", popt_floor}};
    }
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double distance = 0.0;  // the check's primary numeric margin
    std::uint64_t seed = 0;
    json detail;        // additional fields merged into the record
    std::string claim;  // reproduced-claim tag counted when passed
};

struct Report {
    std::uint64_t seed = 0;
    Tolerances tolerances;
    std::map<std::string, std::vector<CheckResult>> sections;

    int checks_run() const {
        int n = 0;
        for (const auto& [_, checks] : sections) n += static_cast<int>(checks.size());
        return n;
    }
    int checks_passed() const {
        int n = 0;
        for (const auto& [_, checks] : sections) {
            for (const auto& c : checks) n += c.passed ? 1 : 0;
        }
        return n;
    }
    bool all_passed() const { return checks_passed() == checks_run(); }
};

inline json to_json(const Report& r) {
    json sections = json::object();
    for (const auto& [name, checks] : r.sections) {
        json list = json::array();
        for (const auto& c : checks) {
            json rec = {{"check", c.name},
                        {"passed", c.passed},
                        {"distance", c.distance},
                        {"seed", c.seed},
                        {"verdict", c.passed ? "pass" : "fail"}};
            if (c.detail.is_object()) {
                for (const auto& [k, v] : c.detail.items()) rec[k] = v;
            }
            list.push_back(rec);
        }
        sections[name] = list;
    }
    std::set<std::string> claims;
    for (const auto& [_, checks] : r.sections) {
        for (const auto& c : checks) {
            if (c.passed && !c.claim.empty()) claims.insert(c.claim);
        }
    }
    return {{"metadata",
             {{"seed", r.seed}, {"tolerances", r.tolerances.to_json()}, {"version", kVersion}}},
            {"sections", sections},
            {"summary",
             {{"checks_run", r.checks_run()},
              {"checks_passed", r.checks_passed()},
              {"paper_claims_reproduced", json(claims)}}}};
}

namespace detail {

inline void dump_canonical(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [k, v] : j.items()) {  // std::map iteration: keys sorted
                if (!first) out += ',';
                first = false;
                out += json(k).dump();
                out += ':';
                dump_canonical(v, out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                dump_canonical(j[i], out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.12g", j.get<double>());
            out += buf;
            break;
        }
        default: out += j.dump(); break;
    }
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace detail

/// Canonical JSON bytes: sorted keys, 12-significant-digit floats.
inline std::string canonical_json(const json& j) {
    std::string out;
    detail::dump_canonical(j, out);
    out += '\n';
    return out;
}

/// Lossy flat view, one row per check.
inline std::string to_csv(const Report& r) {
    std::string out = "section,check,passed,seed,distance,claim\n";
    for (const auto& [name, checks] : r.sections) {
        for (const auto& c : checks) {
            char dist[40];
            std::snprintf(dist, sizeof(dist), "%.12g", c.distance);
            out += detail::csv_field(name) + ',' + detail::csv_field(c.name) + ',' +
                   (c.passed ? "true" : "false") + ',' + std::to_string(c.seed) + ',' + dist +
                   ',' + detail::csv_field(c.claim) + '\n';
        }
    }
    return out;
}

}  // namespace causalq::report
