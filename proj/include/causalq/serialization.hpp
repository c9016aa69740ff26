#pragma once

// JSON wire formats. Complex numbers serialize as two-element [re, im]
// arrays, operators as row-major nested arrays, gates as tagged records,
// scenario files as arrays of {initial, alice_op, bob_op, extension?,
// expect?} records.

#include "causalq/gates.hpp"
#include "causalq/qlin.hpp"
#include "causalq/timeorder.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace causalq::io {

using json = nlohmann::json;
using gates::GateKind;
using gates::GateSpec;
using qlin::Cx;
using qlin::Ket;
using qlin::Mat;
using qlin::Vec;

/// Input problems carry exit-worthy diagnostics; `record` is the offending
/// scenario index when known, -1 otherwise.
class ScenarioError : public std::runtime_error {
  public:
    ScenarioError(std::string message, int record = -1)
        : std::runtime_error(std::move(message)), record_(record) {}
    int record() const { return record_; }

  private:
    int record_;
};

inline json to_json(const Cx& z) { return json::array({z.real(), z.imag()}); }

inline Cx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ScenarioError("expected a complex number as [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(const Vec& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
    return out;
}

inline json to_json(const Mat& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

inline Vec vec_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ScenarioError("expected an amplitude array");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    return v;
}

inline Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ScenarioError("expected a matrix as nested arrays");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (static_cast<Eigen::Index>(j[static_cast<size_t>(i)].size()) != cols) {
            throw ScenarioError("matrix rows have inconsistent lengths");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            m(i, k) = complex_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(k)]);
        }
    }
    return m;
}

inline json to_json(const GateSpec& g) {
    switch (g.kind()) {
        case GateKind::Unitary:
            return {{"kind", "unitary"}, {"matrix", to_json(g.as<gates::Unitary>().matrix)}};
        case GateKind::Conjugation: return {{"kind", "conjugation"}};
        case GateKind::AntiUnitary:
            return {{"kind", "antiunitary"},
                    {"matrix", to_json(g.as<gates::AntiUnitary>().unitary)}};
        case GateKind::Kraus: {
            json els = json::array();
            for (const Mat& a : g.as<gates::KrausChannel>().elements) els.push_back(to_json(a));
            return {{"kind", "kraus"}, {"elements", els}};
        }
        default: {
            json basis = json::array();
            for (const Ket& b : g.as<gates::ProjectiveMeasurement>().basis) {
                basis.push_back(to_json(b.vector()));
            }
            return {{"kind", "measurement"}, {"basis", basis}};
        }
    }
}

inline GateSpec gate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ScenarioError("gate record needs a \"kind\" tag");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "conjugation") return GateSpec(gates::Conjugation{});
    if (kind == "unitary") return GateSpec(gates::Unitary{mat_from_json(j.at("matrix"))});
    if (kind == "antiunitary") return GateSpec(gates::AntiUnitary{mat_from_json(j.at("matrix"))});
    if (kind == "kraus") {
        std::vector<Mat> els;
        for (const auto& e : j.at("elements")) els.push_back(mat_from_json(e));
        return GateSpec(gates::KrausChannel{std::move(els)});
    }
    if (kind == "measurement") {
        std::vector<Ket> basis;
        for (const auto& b : j.at("basis")) basis.emplace_back(vec_from_json(b));
        return GateSpec(gates::ProjectiveMeasurement{std::move(basis)});
    }
    throw ScenarioError("unknown gate kind \"" + kind + "\"");
}

inline json to_json(const timeorder::ExtensionRule& ext) {
    json out = {{"name", ext.name}};
    if (ext.coefficient_map) {
        json rows = json::array();
        for (Eigen::Index i = 0; i < 16; ++i) {
            json row = json::array();
            for (Eigen::Index k = 0; k < 16; ++k) row.push_back((*ext.coefficient_map)(i, k));
            rows.push_back(row);
        }
        out["pauli_map"] = rows;
    }
    return out;
}

inline timeorder::ExtensionRule extension_from_json(const json& j) {
    if (!j.is_object() || !j.contains("name")) {
        throw ScenarioError("extension record needs a \"name\"");
    }
    const std::string name = j["name"].get<std::string>();
    if (j.contains("pauli_map")) {
        const auto& rows = j["pauli_map"];
        if (!rows.is_array() || rows.size() != 16) {
            throw ScenarioError("extension \"" + name + "\": pauli_map must be 16x16");
        }
        Eigen::MatrixXd m(16, 16);
        for (size_t i = 0; i < 16; ++i) {
            if (rows[i].size() != 16) {
                throw ScenarioError("extension \"" + name + "\": pauli_map must be 16x16");
            }
            for (size_t k = 0; k < 16; ++k) {
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                    rows[i][k].get<double>();
            }
        }
        return timeorder::pauli_map_extension(name, m);
    }
    if (name == "identity-on-joint") return timeorder::identity_extension();
    if (name == "global-conjugation") return timeorder::global_conjugation_extension();
    if (name == "partial-transpose-b") return timeorder::partial_transpose_extension();
    throw ScenarioError("unknown extension rule \"" + name + "\" (no pauli_map given)");
}

inline const char* to_string(timeorder::VerdictKind kind) {
    switch (kind) {
        case timeorder::VerdictKind::Compliant: return "compliant";
        case timeorder::VerdictKind::ViolationA: return "violation_a";
        default: return "violation_b";
    }
}

inline timeorder::VerdictKind verdict_from_string(const std::string& s) {
    if (s == "compliant") return timeorder::VerdictKind::Compliant;
    if (s == "violation_a") return timeorder::VerdictKind::ViolationA;
    if (s == "violation_b") return timeorder::VerdictKind::ViolationB;
    throw ScenarioError("unknown verdict \"" + s + "\"");
}

/// A parsed scenario plus the optional expectations the CLI scores against.
struct ScenarioRecord {
    timeorder::Scenario scenario;
    std::optional<timeorder::VerdictKind> expect_verdict;
    std::optional<bool> expect_signals;
};

inline json to_json(const ScenarioRecord& r) {
    json out = {{"initial", to_json(r.scenario.initial.matrix())},
                {"alice_op", to_json(r.scenario.alice_op)},
                {"bob_op", to_json(r.scenario.bob_op)}};
    if (r.scenario.bob_extension) out["extension"] = to_json(*r.scenario.bob_extension);
    json expect;
    if (r.expect_verdict) expect["verdict"] = to_string(*r.expect_verdict);
    if (r.expect_signals) expect["signals"] = *r.expect_signals;
    if (!expect.empty()) out["expect"] = expect;
    return out;
}

inline ScenarioRecord scenario_from_json(const json& j) {
    if (!j.is_object()) throw ScenarioError("scenario record must be an object");
    ScenarioRecord out{
        timeorder::Scenario{qlin::DensityOperator(mat_from_json(j.at("initial"))),
                            gate_from_json(j.at("alice_op")), gate_from_json(j.at("bob_op")),
                            std::nullopt},
        std::nullopt, std::nullopt};
    if (j.contains("extension")) {
        out.scenario.bob_extension = extension_from_json(j["extension"]);
    }
    if (j.contains("expect")) {
        const auto& e = j["expect"];
        if (e.contains("verdict")) {
            out.expect_verdict = verdict_from_string(e["verdict"].get<std::string>());
        }
        if (e.contains("signals")) out.expect_signals = e["signals"].get<bool>();
    }
    return out;
}

inline std::vector<ScenarioRecord> scenarios_from_json(const json& j) {
    if (!j.is_array()) throw ScenarioError("scenario file must be a JSON array");
    std::vector<ScenarioRecord> out;
    for (size_t i = 0; i < j.size(); ++i) {
        try {
            out.push_back(scenario_from_json(j[i]));
        } catch (const std::exception& e) {
            throw ScenarioError("record " + std::to_string(i) + ": " + e.what(),
                                static_cast<int>(i));
        }
    }
    return out;
}

inline json to_json(const std::vector<ScenarioRecord>& records) {
    json out = json::array();
    for (const auto& r : records) out.push_back(to_json(r));
    return out;
}

inline std::vector<ScenarioRecord> parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file \"" + path + "\"");
    json j;
    try {
        j = json::parse(in);  // parse errors carry the byte position
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("parse error in \"") + path + "\": " + e.what());
    }
    return scenarios_from_json(j);
}

}  // namespace causalq::io
