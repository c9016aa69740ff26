#pragma once

// The verification suites behind the command-line front end. Every check is
// a pure function of (tolerances, seed), so a fixed configuration renders
// byte-identical reports; the parallelism knob only partitions the check
// list across threads.

#include "causalq/families.hpp"
#include "causalq/gates.hpp"
#include "causalq/popt.hpp"
#include "causalq/qlin.hpp"
#include "causalq/random.hpp"
#include "causalq/report.hpp"
#include "causalq/serialization.hpp"
#include "causalq/steering.hpp"
#include "causalq/timeorder.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace causalq::suites {

using qlin::Axis;
using qlin::Mat;
using report::CheckResult;
using report::Tolerances;

enum class Command { VerifyAll, Scenario, Families, Popt, Steering };
enum class Format { Json, Csv };

struct RunConfig {
    Command command = Command::VerifyAll;
    std::optional<std::string> scenario_path;
    std::uint64_t seed = 0;
    Tolerances tolerances;
    std::optional<std::string> output;
    Format format = Format::Json;
    int parallel = 1;
};

namespace detail {

struct CheckSpec {
    std::string section;
    std::string name;
    std::function<CheckResult(const Tolerances&, std::uint64_t)> fn;
};

inline CheckResult make_result(std::string name, bool passed, double distance,
                               std::uint64_t seed, std::string claim = "",
                               report::json detail = report::json::object()) {
    CheckResult r;
    r.name = std::move(name);
    r.passed = passed;
    r.distance = distance;
    r.seed = seed;
    r.claim = std::move(claim);
    r.detail = std::move(detail);
    return r;
}

// --- gates ------------------------------------------------------------

inline void add_gate_checks(std::vector<CheckSpec>& specs) {
    specs.push_back({"gates", "conjugation-basis-table", [](const Tolerances&, std::uint64_t seed) {
        using namespace qlin;
        const gates::GateSpec k{gates::Conjugation{}};
        const std::pair<Ket, Ket> table[] = {
            {ket0(), ket0()},           {ket1(), ket1()},
            {ket_plus_x(), ket_plus_x()},   {ket_minus_x(), ket_minus_x()},
            {ket_plus_y(), ket_minus_y()},  {ket_minus_y(), ket_plus_y()}};
        double worst = 0.0;
        for (const auto& [in, want] : table) {
            worst = std::max(worst, trace_distance(gates::apply_pure(k, in).projector(),
                                                   want.projector()));
        }
        return make_result("conjugation-basis-table", worst <= 1e-12, worst, seed,
                           "conjugation-basis-table");
    }});
    specs.push_back({"gates", "antiunitarity-witness", [](const Tolerances& tol,
                                                          std::uint64_t seed) {
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            auto rng = random::seeded(seed, 100 + static_cast<std::uint64_t>(i));
            const gates::GateSpec e = random::random_antiunitary(rng);
            const qlin::Ket phi = random::random_ket(2, rng);
            const qlin::Ket psi = random::random_ket(2, rng);
            const qlin::Cx before = (phi.vector().adjoint() * psi.vector())(0, 0);
            const qlin::Cx after = (gates::apply_pure(e, phi).vector().adjoint() *
                                    gates::apply_pure(e, psi).vector())(0, 0);
            worst = std::max(worst, std::abs(after - std::conj(before)));
        }
        return make_result("antiunitarity-witness", worst <= tol.invariant, worst, seed,
                           "antiunitary-inner-product-conjugation");
    }});
}

// --- steering ---------------------------------------------------------

inline void add_steering_checks(std::vector<CheckSpec>& specs) {
    specs.push_back({"steering", "antiunitary-ensemble-no-signaling",
                     [](const Tolerances& tol, std::uint64_t seed) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            auto rng = random::seeded(seed, 1000 + static_cast<std::uint64_t>(i));
            const auto rho = random::random_density(2, rng);
            const auto e1 =
                steering::random_decomposition(rho, 2 + static_cast<int>(rng() % 3), rng);
            const auto e2 =
                steering::random_decomposition(rho, 2 + static_cast<int>(rng() % 3), rng);
            const auto g = random::random_antiunitary(rng);
            worst = std::max(worst,
                             steering::rc_ensemble_check(g, e1, e2, tol.state_equality).distance);
        }
        return make_result("antiunitary-ensemble-no-signaling", worst <= tol.invariant, worst,
                           seed, "antiunitary-no-signaling", {{"instances", 1000}});
    }});
    specs.push_back({"steering", "kraus-marginal-no-signaling",
                     [](const Tolerances& tol, std::uint64_t seed) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            auto rng = random::seeded(seed, 2000 + static_cast<std::uint64_t>(i));
            const auto rho = random::random_density(4, rng);
            const gates::GateSpec ch{
                gates::KrausChannel{random::random_kraus(2, 2 + static_cast<int>(rng() % 3), rng)}};
            worst = std::max(
                worst,
                steering::rc_marginal_check(ch, rho, gates::Side::A, tol.state_equality).distance);
        }
        return make_result("kraus-marginal-no-signaling", worst <= tol.invariant, worst, seed,
                           "kraus-no-signaling", {{"instances", 1000}});
    }});
    specs.push_back({"steering", "kraus-order-commutation",
                     [](const Tolerances& tol, std::uint64_t seed) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            auto rng = random::seeded(seed, 3000 + static_cast<std::uint64_t>(i));
            const auto rho = random::random_density(4, rng);
            const auto la = random::random_kraus(2, 2, rng);
            const auto lb = random::random_kraus(2, 2, rng);
            const Mat ab =
                gates::apply_kraus(lb, gates::apply_kraus(la, rho.matrix(), gates::Side::A),
                                   gates::Side::B);
            const Mat ba =
                gates::apply_kraus(la, gates::apply_kraus(lb, rho.matrix(), gates::Side::B),
                                   gates::Side::A);
            worst = std::max(worst, qlin::trace_distance(ab, ba));
        }
        return make_result("kraus-order-commutation", worst <= tol.invariant, worst, seed,
                           "local-operation-commutation", {{"instances", 1000}});
    }});
}

// --- timeorder ----------------------------------------------------------

inline Mat canonical_mixture(Axis axis) {
    using namespace qlin;
    switch (axis) {
        case Axis::Z:
            return 0.5 * tensor(ket0(), ket1()).projector() +
                   0.5 * tensor(ket1(), ket0()).projector();
        case Axis::X:
            return 0.5 * tensor(ket_plus_x(), ket_minus_x()).projector() +
                   0.5 * tensor(ket_minus_x(), ket_plus_x()).projector();
        default:
            return 0.5 * tensor(ket_plus_y(), ket_plus_y()).projector() +
                   0.5 * tensor(ket_minus_y(), ket_minus_y()).projector();
    }
}

inline void add_timeorder_checks(std::vector<CheckSpec>& specs) {
    const std::pair<Axis, const char*> scenarios[] = {
        {Axis::Z, "scenario-1"}, {Axis::X, "scenario-2"}, {Axis::Y, "scenario-3"}};
    for (const auto& [axis, label] : scenarios) {
        const std::string name = std::string(label) + "-post-measurement-mixture";
        const Axis ax = axis;
        specs.push_back({"timeorder", name, [name, ax](const Tolerances& tol,
                                                       std::uint64_t seed) {
            const Mat out = timeorder::run_order(timeorder::canonical_scenario(ax),
                                                 timeorder::OpOrder::AliceThenBob);
            const double d = qlin::trace_distance(out, canonical_mixture(ax));
            return make_result(name, d <= tol.invariant, d, seed, name);
        }});
    }
    specs.push_back({"timeorder", "violation-b-demo", [](const Tolerances& tol,
                                                         std::uint64_t seed) {
        const auto s =
            timeorder::canonical_scenario(Axis::Y, timeorder::global_conjugation_extension());
        const auto v = timeorder::classify(s, tol.state_equality);
        const auto cross = timeorder::rc_cross_check(s, tol.state_equality);
        const bool ok = v.kind == timeorder::VerdictKind::ViolationB &&
                        std::abs(v.joint_distance - 1.0) <= tol.invariant &&
                        v.marginal_distance_a <= tol.invariant &&
                        v.marginal_distance_b <= tol.invariant && !cross.signals;
        return make_result(
            "violation-b-demo", ok, std::abs(v.joint_distance - 1.0), seed,
            "ac-violation-without-signaling",
            {{"joint_distance", v.joint_distance},
             {"marginal_distance_a", v.marginal_distance_a},
             {"marginal_distance_b", v.marginal_distance_b},
             {"signals", cross.signals}});
    }});
    specs.push_back({"timeorder", "transposed-singlet-escape", [](const Tolerances& tol,
                                                                  std::uint64_t seed) {
        double worst = 0.0;
        double omega_min = 0.0;
        for (const Axis axis : {Axis::Z, Axis::X, Axis::Y}) {
            const auto s =
                timeorder::canonical_scenario(axis, timeorder::partial_transpose_extension());
            worst = std::max(worst, timeorder::classify(s, tol.state_equality).joint_distance);
            omega_min = std::min(
                omega_min,
                timeorder::OmegaConstraint::min_eigenvalue(timeorder::bob_joint_action(s)));
        }
        return make_result("transposed-singlet-escape", worst <= tol.invariant, worst, seed,
                           "transposed-singlet-escape",
                           {{"omega_min_eigenvalue", omega_min}});
    }});
    specs.push_back({"timeorder", "compliant-kraus-scenarios", [](const Tolerances& tol,
                                                                  std::uint64_t seed) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            auto rng = random::seeded(seed, 4000 + static_cast<std::uint64_t>(i));
            const timeorder::Scenario s{
                random::random_density(4, rng),
                gates::GateSpec(gates::KrausChannel{random::random_kraus(2, 2, rng)}),
                gates::GateSpec(gates::KrausChannel{random::random_kraus(2, 2, rng)}),
                std::nullopt};
            worst = std::max(worst, timeorder::classify(s, tol.state_equality).joint_distance);
        }
        return make_result("compliant-kraus-scenarios", worst <= tol.invariant, worst, seed,
                           "kraus-scenario-compliance", {{"instances", 1000}});
    }});
}

// --- families -----------------------------------------------------------

inline void add_families_checks(std::vector<CheckSpec>& specs) {
    using families::FamilyLabel;
    const std::pair<FamilyLabel, FamilyLabel> pairs[] = {
        {FamilyLabel::A1, FamilyLabel::A2},
        {FamilyLabel::A1, FamilyLabel::A3},
        {FamilyLabel::A2, FamilyLabel::A3}};
    for (const auto& [fa, fb] : pairs) {
        const std::string name = std::string("pairwise-") + families::to_string(fa) + "-" +
                                 families::to_string(fb);
        const FamilyLabel la = fa, lb = fb;
        specs.push_back({"families", name, [name, la, lb](const Tolerances& tol,
                                                          std::uint64_t seed) {
            const auto r = families::pairwise_intersection(la, lb, tol.state_equality);
            const bool unique = r.kind == families::IntersectionKind::UniqueState &&
                                r.constraint_rank == 16 && r.members.size() == 1;
            double distance = r.residual;
            std::string claim = "pairwise-intersection-unique";
            report::json detail = {{"pair", std::string(families::to_string(la)) + "," +
                                                families::to_string(lb)},
                                   {"members", static_cast<int>(r.members.size())},
                                   {"constraint_rank", r.constraint_rank},
                                   {"residual", r.residual}};
            if (la == FamilyLabel::A1 && lb == FamilyLabel::A2 && unique) {
                distance = qlin::trace_distance(r.members.front(),
                                                qlin::singlet().projector());
                claim = "pairwise-intersection-singlet";
                detail["member_is_singlet_distance"] = distance;
            }
            return make_result(name, unique && distance <= tol.state_equality, distance, seed,
                               claim, detail);
        }});
    }
    specs.push_back({"families", "triple-intersection-empty", [](const Tolerances& tol,
                                                                 std::uint64_t seed) {
        const auto cert = families::triple_intersection_empty();
        const double gap_error = std::abs(cert.witness_gap - 2.0);
        const bool ok = cert.empty && gap_error <= tol.invariant &&
                        cert.grid_points_checked >= 10000 && cert.counterexamples == 0;
        return make_result("triple-intersection-empty", ok, gap_error, seed,
                           "triple-intersection-empty",
                           {{"witness_gap", cert.witness_gap},
                            {"grid_points_checked", cert.grid_points_checked},
                            {"counterexamples", cert.counterexamples},
                            {"other_family_hits", cert.other_family_hits}});
    }});
    specs.push_back({"families", "constraint-grid-agreement", [](const Tolerances& tol,
                                                                 std::uint64_t seed) {
        std::vector<timeorder::OmegaConstraint> constraints;
        for (const Axis axis : {Axis::Z, Axis::X, Axis::Y}) {
            constraints.push_back(
                timeorder::omega_constraint(timeorder::canonical_scenario(axis)));
        }
        long disagreements = 0;
        long own_rejections = 0;
        long points = 0;
        for (size_t fi = 0; fi < 3; ++fi) {
            const auto& f = families::all_families()[fi];
            for (int k = 0; k < 256; ++k) {
                ++points;
                const Mat w = families::family_state(f, 2.0 * M_PI * k / 256.0).projector();
                if (!constraints[fi].accepts(w, tol.state_equality)) ++own_rejections;
                for (size_t si = 0; si < 3; ++si) {
                    const bool omega = constraints[si].accepts(w, tol.state_equality);
                    const bool hull =
                        families::membership(families::all_families()[si], w,
                                             tol.state_equality);
                    if (omega != hull) ++disagreements;
                }
            }
            for (int i = 0; i < 64; ++i) {
                ++points;
                auto rng = random::seeded(seed, 5000 + 100 * fi + static_cast<std::uint64_t>(i));
                const Mat w =
                    0.7 * families::family_state(f, random::uniform(rng) * 2 * M_PI)
                              .projector() +
                    0.3 * families::family_state(f, random::uniform(rng) * 2 * M_PI + 1.0)
                              .projector();
                if (!constraints[fi].accepts(w, tol.state_equality)) ++own_rejections;
                for (size_t si = 0; si < 3; ++si) {
                    const bool omega = constraints[si].accepts(w, tol.state_equality);
                    const bool hull =
                        families::membership(families::all_families()[si], w,
                                             tol.state_equality);
                    if (omega != hull) ++disagreements;
                }
            }
        }
        const bool ok = disagreements == 0 && own_rejections == 0;
        return make_result("constraint-grid-agreement", ok,
                           static_cast<double>(disagreements + own_rejections), seed,
                           "family-constraint-grid",
                           {{"grid_points", points},
                            {"disagreements", disagreements},
                            {"own_rejections", own_rejections}});
    }});
}

// --- popt -----------------------------------------------------------------

inline void add_popt_checks(std::vector<CheckSpec>& specs) {
    specs.push_back({"popt", "transposed-singlet-spectrum", [](const Tolerances& tol,
                                                               std::uint64_t seed) {
        const auto es = qlin::eig_hermitian(popt::build_S().matrix());
        const double want[] = {-0.5, 0.5, 0.5, 0.5};
        double worst = 0.0;
        report::json eigs = report::json::array();
        for (int i = 0; i < 4; ++i) {
            worst = std::max(worst, std::abs(es.values[static_cast<size_t>(i)] - want[i]));
            eigs.push_back(es.values[static_cast<size_t>(i)]);
        }
        return make_result("transposed-singlet-spectrum", worst <= tol.invariant, worst, seed,
                           "transposed-singlet-negative-eigenvalue", {{"eigenvalues", eigs}});
    }});
    specs.push_back({"popt", "transposed-singlet-correlations", [](const Tolerances&,
                                                                   std::uint64_t seed) {
        const Mat s = popt::build_S().matrix();
        const double cz = qlin::pauli_correlation(s, Axis::Z, Axis::Z);
        const double cx = qlin::pauli_correlation(s, Axis::X, Axis::X);
        const double cy = qlin::pauli_correlation(s, Axis::Y, Axis::Y);
        const double worst = std::max({std::abs(cz + 1.0), std::abs(cx + 1.0),
                                       std::abs(cy - 1.0)});
        return make_result(
            "transposed-singlet-correlations", worst <= 1e-12, worst, seed,
            "transposed-singlet-correlations",
            {{"correlations", {{"zz", cz}, {"xx", cx}, {"yy", cy}}},
             {"note", "the y-basis correlation of this operator is +1 (correlated); "
                      "z and x are -1 (anti-correlated)"}});
    }});
    specs.push_back({"popt", "transposed-singlet-product-positivity",
                     [](const Tolerances& tol, std::uint64_t seed) {
        const auto cert = popt::is_popt(popt::build_S().matrix(), tol.popt_floor);
        const bool ok = cert.popt && cert.min_product_value <= 1e-6;
        return make_result("transposed-singlet-product-positivity", ok,
                           std::abs(cert.min_product_value), seed, "transposed-singlet-popt",
                           {{"min_product_value", cert.min_product_value},
                            {"argmin",
                             {{"theta_a", cert.argmin.theta_a},
                              {"phi_a", cert.argmin.phi_a},
                              {"theta_b", cert.argmin.theta_b},
                              {"phi_b", cert.argmin.phi_b}}}});
    }});
    specs.push_back({"popt", "generalized-membership", [](const Tolerances& tol,
                                                          std::uint64_t seed) {
        const auto s = popt::build_S();
        bool all = true;
        report::json detail = report::json::object();
        for (const auto& f : families::all_families()) {
            const bool member = popt::generalized_membership(f, s, tol.state_equality);
            detail[families::to_string(f.label)] = member;
            all = all && member;
        }
        return make_result("generalized-membership", all, all ? 0.0 : 1.0, seed,
                           "common-solution-restored", detail);
    }});
    specs.push_back({"popt", "scenario-consistency", [](const Tolerances& tol,
                                                        std::uint64_t seed) {
        const auto s_report =
            popt::scenario_consistency_report(popt::build_S(), tol.state_equality);
        const auto singlet_report = popt::scenario_consistency_report(
            popt::PoptState::certify(qlin::singlet().projector()), tol.state_equality);
        const bool ok = s_report.all_pass && singlet_report.passes[0] &&
                        singlet_report.passes[1] && !singlet_report.passes[2];
        return make_result(
            "scenario-consistency", ok, ok ? 0.0 : 1.0, seed, "proof-breakdown-at-popt",
            {{"transposed_singlet",
              {s_report.passes[0], s_report.passes[1], s_report.passes[2]}},
             {"singlet",
              {singlet_report.passes[0], singlet_report.passes[1], singlet_report.passes[2]}}});
    }});
    specs.push_back({"popt", "density-operator-popt-sweep", [](const Tolerances& tol,
                                                               std::uint64_t seed) {
        double worst = 0.0;
        for (int i = 0; i < 500; ++i) {
            auto rng = random::seeded(seed, 6000 + static_cast<std::uint64_t>(i));
            const auto rho = random::random_density(4, rng, 1 + static_cast<int>(rng() % 4));
            const auto cert = popt::is_popt(rho.matrix(), tol.popt_floor);
            worst = std::min(worst, cert.min_product_value);
        }
        return make_result("density-operator-popt-sweep", worst >= tol.popt_floor,
                           std::abs(std::min(worst, 0.0)), seed, "states-are-popt",
                           {{"instances", 500}, {"min_product_value", worst}});
    }});
}

// --- scenario files ---------------------------------------------------

inline void add_scenario_checks(std::vector<CheckSpec>& specs,
                                const std::vector<io::ScenarioRecord>& records) {
    for (size_t i = 0; i < records.size(); ++i) {
        char tag[32];
        std::snprintf(tag, sizeof(tag), "scenario-%03zu", i);
        const io::ScenarioRecord& rec = records[i];
        if (timeorder::classifiable(rec.scenario)) {
            const std::string name = std::string(tag) + "-classify";
            specs.push_back({"timeorder", name, [name, &rec](const Tolerances& tol,
                                                             std::uint64_t seed) {
                const auto v = timeorder::classify(rec.scenario, tol.state_equality);
                const auto expected =
                    rec.expect_verdict.value_or(timeorder::VerdictKind::Compliant);
                report::json detail = {{"verdict", io::to_string(v.kind)},
                                       {"expected", io::to_string(expected)},
                                       {"joint_distance", v.joint_distance},
                                       {"marginal_distance_a", v.marginal_distance_a},
                                       {"marginal_distance_b", v.marginal_distance_b}};
                if (rec.scenario.bob_extension) {
                    detail["omega_min_eigenvalue"] = timeorder::OmegaConstraint::min_eigenvalue(
                        timeorder::bob_joint_action(rec.scenario));
                }
                return make_result(name, v.kind == expected, v.joint_distance, seed, "", detail);
            }});
        }
        const std::string name = std::string(tag) + "-signaling";
        specs.push_back({"timeorder", name, [name, &rec](const Tolerances& tol,
                                                         std::uint64_t seed) {
            const auto cross = timeorder::rc_cross_check(rec.scenario, tol.state_equality);
            const bool expected = rec.expect_signals.value_or(false);
            return make_result(name, cross.signals == expected,
                               std::max(cross.alice_to_bob, cross.bob_to_alice), seed, "",
                               {{"signals", cross.signals},
                                {"alice_to_bob", cross.alice_to_bob},
                                {"bob_to_alice", cross.bob_to_alice}});
        }});
    }
}

}  // namespace detail

/// Executes the configured suites and assembles the report. Throws
/// io::ScenarioError on unreadable or invalid scenario input.
inline report::Report run_suites(const RunConfig& cfg) {
    std::vector<detail::CheckSpec> specs;
    std::vector<io::ScenarioRecord> records;
    switch (cfg.command) {
        case Command::VerifyAll:
            detail::add_gate_checks(specs);
            detail::add_steering_checks(specs);
            detail::add_timeorder_checks(specs);
            detail::add_families_checks(specs);
            detail::add_popt_checks(specs);
            break;
        case Command::Scenario: {
            if (!cfg.scenario_path) {
                throw io::ScenarioError("the scenario command needs a scenario file");
            }
            records = io::parse_scenario_file(*cfg.scenario_path);
            detail::add_scenario_checks(specs, records);
            break;
        }
        case Command::Families: detail::add_families_checks(specs); break;
        case Command::Popt: detail::add_popt_checks(specs); break;
        case Command::Steering: detail::add_steering_checks(specs); break;
    }

    std::vector<CheckResult> results(specs.size());
    const auto eval_range = [&](size_t begin, size_t stride) {
        for (size_t i = begin; i < specs.size(); i += stride) {
            results[i] = specs[i].fn(cfg.tolerances, cfg.seed);
        }
    };
    const int workers = std::max(1, cfg.parallel);
    if (workers == 1 || specs.size() <= 1) {
        eval_range(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back(eval_range, static_cast<size_t>(t),
                              static_cast<size_t>(workers));
        }
        for (auto& t : pool) t.join();
    }

    report::Report rep;
    rep.seed = cfg.seed;
    rep.tolerances = cfg.tolerances;
    if (cfg.command == Command::Scenario) rep.sections["timeorder"];  // present even when empty
    for (size_t i = 0; i < specs.size(); ++i) {
        rep.sections[specs[i].section].push_back(results[i]);
    }
    for (auto& [_, checks] : rep.sections) {
        std::sort(checks.begin(), checks.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    }
    return rep;
}

inline std::string render(const report::Report& rep, Format format) {
    return format == Format::Json ? report::canonical_json(report::to_json(rep))
                                  : report::to_csv(rep);
}

/// Full run: execute, render, write. Exit status 0 when every check passed,
/// 1 on any check failure, 2 on input errors.
inline int run(const RunConfig& cfg) {
    report::Report rep;
    try {
        rep = run_suites(cfg);
    } catch (const io::ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const std::string rendered = render(rep, cfg.format);
    if (cfg.output) {
        std::ofstream out(*cfg.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write \"" << *cfg.output << "\"\n";
            return 2;
        }
        out << rendered;
    } else {
        std::cout << rendered;
    }
    return rep.all_passed() ? 0 : 1;
}

}  // namespace causalq::suites
