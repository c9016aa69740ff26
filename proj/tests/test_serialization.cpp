#include <catch2/catch_amalgamated.hpp>

#include "causalq/report.hpp"
#include "causalq/serialization.hpp"
#include "causalq/suites.hpp"
#include "support/helpers.hpp"

#include <cstdio>
#include <fstream>

using namespace causalq;
using namespace causalq::qlin;
using namespace causalq::io;
using test_helpers::mat_close;

#ifndef CAUSALQ_DATA_DIR
#define CAUSALQ_DATA_DIR "data"
#endif

namespace {

const std::string kData = CAUSALQ_DATA_DIR;

bool same_gate(const gates::GateSpec& a, const gates::GateSpec& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case gates::GateKind::Unitary:
            return mat_close(a.as<gates::Unitary>().matrix, b.as<gates::Unitary>().matrix);
        case gates::GateKind::AntiUnitary:
            return mat_close(a.as<gates::AntiUnitary>().unitary,
                             b.as<gates::AntiUnitary>().unitary);
        case gates::GateKind::Conjugation: return true;
        case gates::GateKind::Kraus: {
            const auto& ea = a.as<gates::KrausChannel>().elements;
            const auto& eb = b.as<gates::KrausChannel>().elements;
            if (ea.size() != eb.size()) return false;
            for (size_t i = 0; i < ea.size(); ++i) {
                if (!mat_close(ea[i], eb[i])) return false;
            }
            return true;
        }
        default: {
            const auto& ba = a.as<gates::ProjectiveMeasurement>().basis;
            const auto& bb = b.as<gates::ProjectiveMeasurement>().basis;
            if (ba.size() != bb.size()) return false;
            for (size_t i = 0; i < ba.size(); ++i) {
                if (!test_helpers::vec_close(ba[i].vector(), bb[i].vector())) return false;
            }
            return true;
        }
    }
}

}  // namespace

TEST_CASE("complex and matrix wire format", "[serialization]") {
    const Cx z(0.25, -1.5);
    CHECK(complex_from_json(to_json(z)) == z);
    const Mat m = singlet().projector();
    CHECK(mat_close(mat_from_json(to_json(m)), m));
    CHECK_THROWS_AS(complex_from_json(json::array({1.0})), ScenarioError);
}

TEST_CASE("gate records round trip", "[serialization]") {
    const std::vector<gates::GateSpec> specs = {
        gates::GateSpec(gates::Unitary{sigma_x()}),
        gates::GateSpec(gates::Conjugation{}),
        gates::GateSpec(gates::AntiUnitary{sigma_z()}),
        gates::GateSpec(gates::KrausChannel{{sigma_x() / M_SQRT2, Mat(sigma_z() / M_SQRT2)}}),
        gates::GateSpec(gates::axis_measurement(Axis::Y))};
    for (const auto& g : specs) {
        CHECK(same_gate(g, gate_from_json(to_json(g))));
    }
    CHECK_THROWS_AS(gate_from_json(json{{"kind", "teleport"}}), ScenarioError);
}

TEST_CASE("bundled scenario files parse", "[serialization]") {
    SECTION("the three thought-experiment scenarios") {
        const auto records = parse_scenario_file(kData + "/theorem1_scenarios.json");
        REQUIRE(records.size() == 3);
        for (const auto& r : records) {
            CHECK(r.scenario.alice_op.kind() == gates::GateKind::Measurement);
            CHECK(r.scenario.bob_op.kind() == gates::GateKind::Conjugation);
            CHECK_FALSE(r.scenario.bob_extension.has_value());
            CHECK(mat_close(r.scenario.initial.matrix(), singlet().projector(), 1e-12));
        }
        // Alice's bases are z, x, y in order.
        CHECK(test_helpers::vec_close(
            records[0].scenario.alice_op.as<gates::ProjectiveMeasurement>().basis[0].vector(),
            ket0().vector(), 1e-12));
        CHECK(test_helpers::vec_close(
            records[1].scenario.alice_op.as<gates::ProjectiveMeasurement>().basis[0].vector(),
            ket_plus_x().vector(), 1e-12));
        CHECK(test_helpers::vec_close(
            records[2].scenario.alice_op.as<gates::ProjectiveMeasurement>().basis[0].vector(),
            ket_plus_y().vector(), 1e-12));
    }
    SECTION("an empty list file") {
        CHECK(parse_scenario_file(kData + "/fixtures/empty.json").empty());
    }
    SECTION("a kraus set violating completeness names the record") {
        try {
            parse_scenario_file(kData + "/fixtures/bad_kraus.json");
            FAIL("expected a scenario error");
        } catch (const ScenarioError& e) {
            CHECK(e.record() == 0);
            CHECK(std::string(e.what()).find("record 0") != std::string::npos);
        }
    }
    SECTION("missing files and malformed json are input errors") {
        CHECK_THROWS_AS(parse_scenario_file(kData + "/no_such_file.json"), ScenarioError);
        const std::string bad_path = "/tmp/causalq_bad_fixture.json";
        std::ofstream(bad_path) << "{ not json";
        CHECK_THROWS_AS(parse_scenario_file(bad_path), ScenarioError);
        std::remove(bad_path.c_str());
    }
}

TEST_CASE("scenario sets round trip through emission", "[serialization]") {
    for (const char* name :
         {"/theorem1_scenarios.json", "/violation_b_scenario.json",
          "/popt_escape_scenarios.json"}) {
        const auto records = parse_scenario_file(kData + name);
        const auto reparsed = scenarios_from_json(to_json(records));
        REQUIRE(reparsed.size() == records.size());
        for (size_t i = 0; i < records.size(); ++i) {
            CHECK(mat_close(reparsed[i].scenario.initial.matrix(),
                            records[i].scenario.initial.matrix()));
            CHECK(same_gate(reparsed[i].scenario.alice_op, records[i].scenario.alice_op));
            CHECK(same_gate(reparsed[i].scenario.bob_op, records[i].scenario.bob_op));
            CHECK(reparsed[i].scenario.bob_extension.has_value() ==
                  records[i].scenario.bob_extension.has_value());
            if (records[i].scenario.bob_extension) {
                CHECK(reparsed[i].scenario.bob_extension->name ==
                      records[i].scenario.bob_extension->name);
            }
            CHECK(reparsed[i].expect_verdict == records[i].expect_verdict);
            CHECK(reparsed[i].expect_signals == records[i].expect_signals);
        }
    }
}

TEST_CASE("tolerance registry", "[report]") {
    report::Tolerances tol;
    tol.set("state_equality", 1e-8);
    CHECK(tol.state_equality == 1e-8);
    CHECK_THROWS_AS(tol.set("nonsense", 1.0), std::invalid_argument);
}

TEST_CASE("canonical rendering", "[report]") {
    report::Report rep;
    rep.seed = 7;
    report::CheckResult c;
    c.name = "alpha";
    c.passed = true;
    c.distance = 1.0 / 3.0;
    c.seed = 7;
    c.claim = "sample-claim";
    rep.sections["demo"].push_back(c);
    c.name = "beta";
    c.passed = false;
    c.claim = "";
    rep.sections["demo"].push_back(c);

    SECTION("json bytes are stable and floats carry 12 significant digits") {
        const std::string once = report::canonical_json(report::to_json(rep));
        const std::string twice = report::canonical_json(report::to_json(rep));
        CHECK(once == twice);
        CHECK(once.find("0.333333333333") != std::string::npos);
        CHECK(once.find("\"checks_run\":2") != std::string::npos);
        CHECK(once.find("\"checks_passed\":1") != std::string::npos);
        CHECK(once.find("sample-claim") != std::string::npos);
    }
    SECTION("csv has a header and one row per check") {
        const std::string csv = report::to_csv(rep);
        CHECK(csv.rfind("section,check,passed,seed,distance,claim\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    }
    SECTION("summary counts match the section tallies") {
        const auto j = report::to_json(rep);
        CHECK(j["summary"]["checks_run"] == 2);
        CHECK(j["summary"]["checks_passed"] == 1);
        CHECK(j["sections"]["demo"].size() == 2);
    }
}

TEST_CASE("suite reports for scenario files", "[suites]") {
    SECTION("empty scenario list runs zero checks") {
        suites::RunConfig cfg;
        cfg.command = suites::Command::Scenario;
        cfg.scenario_path = kData + "/fixtures/empty.json";
        const auto rep = suites::run_suites(cfg);
        CHECK(rep.checks_run() == 0);
        CHECK(rep.all_passed());
    }
    SECTION("the violation fixture passes its expectations") {
        suites::RunConfig cfg;
        cfg.command = suites::Command::Scenario;
        cfg.scenario_path = kData + "/violation_b_scenario.json";
        const auto rep = suites::run_suites(cfg);
        CHECK(rep.checks_run() == 2);
        CHECK(rep.all_passed());
    }
    SECTION("a wrong expectation fails without throwing") {
        suites::RunConfig cfg;
        cfg.command = suites::Command::Scenario;
        cfg.scenario_path = kData + "/fixtures/failing_expectation.json";
        const auto rep = suites::run_suites(cfg);
        CHECK(rep.checks_run() == 2);
        CHECK_FALSE(rep.all_passed());
    }
    SECTION("parallel evaluation renders the same bytes") {
        suites::RunConfig cfg;
        cfg.command = suites::Command::Families;
        cfg.seed = 3;
        const std::string sequential =
            suites::render(suites::run_suites(cfg), suites::Format::Json);
        cfg.parallel = 4;
        const std::string parallel =
            suites::render(suites::run_suites(cfg), suites::Format::Json);
        CHECK(sequential == parallel);
    }
}
