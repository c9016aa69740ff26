#include <catch2/catch_amalgamated.hpp>

#include "causalq/qlin.hpp"
#include "causalq/random.hpp"
#include "causalq/timeorder.hpp"
#include "support/helpers.hpp"

using namespace causalq;
using namespace causalq::qlin;
using namespace causalq::gates;
using namespace causalq::timeorder;
using test_helpers::mat_close;

namespace {

Mat z_anticorrelated_mixture() {
    return 0.5 * tensor(ket0(), ket1()).projector() + 0.5 * tensor(ket1(), ket0()).projector();
}

Mat x_anticorrelated_mixture() {
    return 0.5 * tensor(ket_plus_x(), ket_minus_x()).projector() +
           0.5 * tensor(ket_minus_x(), ket_plus_x()).projector();
}

Mat y_correlated_mixture() {
    return 0.5 * tensor(ket_plus_y(), ket_plus_y()).projector() +
           0.5 * tensor(ket_minus_y(), ket_minus_y()).projector();
}

}  // namespace

TEST_CASE("entanglement detection", "[timeorder]") {
    CHECK(is_entangled(singlet().projector()));
    CHECK_FALSE(is_entangled(tensor(ket0(), ket1()).projector()));
    CHECK_FALSE(is_entangled(z_anticorrelated_mixture()));
    CHECK_FALSE(is_entangled(Mat(identity(4) / 4.0)));
}

TEST_CASE("extension rules", "[timeorder]") {
    SECTION("global conjugation fixes the singlet") {
        const auto ext = global_conjugation_extension();
        CHECK(mat_close(ext.map(singlet().projector()), singlet().projector(), 1e-14));
    }
    SECTION("partial transposition on the singlet gives a non-positive operator") {
        const auto ext = partial_transpose_extension();
        const Mat s = ext.map(singlet().projector());
        CHECK(OmegaConstraint::min_eigenvalue(s) == Catch::Approx(-0.5).margin(1e-12));
        CHECK(s.trace().real() == Catch::Approx(1.0).margin(1e-14));
    }
    SECTION("coefficient-map rules validate trace preservation") {
        Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(16, 16);
        CHECK_THROWS_AS(pauli_map_extension("broken", bad), std::invalid_argument);

        Eigen::MatrixXd id = Eigen::MatrixXd::Identity(16, 16);
        const auto ext = pauli_map_extension("identity-by-map", id);
        auto rng = random::seeded(41);
        const Mat w = random::random_density(4, rng).matrix();
        CHECK(mat_close(ext.map(w), w, 1e-12));
    }
}

TEST_CASE("running both time orders", "[timeorder]") {
    SECTION("scenario 1: z measurement then conjugation") {
        const Mat out = run_order(canonical_scenario(Axis::Z), OpOrder::AliceThenBob);
        CHECK(trace_distance(out, z_anticorrelated_mixture()) <= 1e-12);
    }
    SECTION("scenario 2: x measurement then conjugation") {
        const Mat out = run_order(canonical_scenario(Axis::X), OpOrder::AliceThenBob);
        CHECK(trace_distance(out, x_anticorrelated_mixture()) <= 1e-12);
    }
    SECTION("scenario 3: y measurement then conjugation flips to correlation") {
        const Mat out = run_order(canonical_scenario(Axis::Y), OpOrder::AliceThenBob);
        CHECK(trace_distance(out, y_correlated_mixture()) <= 1e-12);
    }
    SECTION("product initial states factor through both orders") {
        auto rng = random::seeded(42);
        for (int i = 0; i < 50; ++i) {
            const Mat ua = random::random_unitary(2, rng);
            const Mat ub = random::random_unitary(2, rng);
            const Scenario s{
                DensityOperator(tensor(random::random_density(2, rng).matrix(),
                                       random::random_density(2, rng).matrix())),
                GateSpec(Unitary{ua}), GateSpec(Unitary{ub}), std::nullopt};
            const Mat ab = run_order(s, OpOrder::AliceThenBob);
            const Mat ba = run_order(s, OpOrder::BobThenAlice);
            CHECK(trace_distance(ab, ba) <= 1e-12);
        }
    }
    SECTION("conjugation before measurement on an entangled state needs a rule") {
        CHECK_THROWS_AS(run_order(canonical_scenario(Axis::Z), OpOrder::BobThenAlice),
                        std::domain_error);
    }
    SECTION("separable joint states inherit the memberwise action without a rule") {
        // Classically correlated in z: conjugation fixes every branch.
        const DensityOperator rho{z_anticorrelated_mixture()};
        const Scenario s{rho, GateSpec(axis_measurement(Axis::Z)), GateSpec(Conjugation{}),
                         std::nullopt};
        const Mat ba = run_order(s, OpOrder::BobThenAlice);
        CHECK(trace_distance(ba, z_anticorrelated_mixture()) <= 1e-12);
    }
}

TEST_CASE("verdict classification", "[timeorder]") {
    SECTION("kraus pairs on the singlet are compliant") {
        auto rng = random::seeded(43);
        const Scenario s{DensityOperator::from_ket(singlet()),
                         GateSpec(KrausChannel{random::random_kraus(2, 2, rng)}),
                         GateSpec(KrausChannel{random::random_kraus(2, 3, rng)}), std::nullopt};
        const auto v = classify(s);
        CHECK(v.kind == VerdictKind::Compliant);
        CHECK(v.joint_distance <= 1e-10);
    }
    SECTION("identical local unitaries on a product state are compliant") {
        const Scenario s{DensityOperator::from_ket(tensor(ket0(), ket0())),
                         GateSpec(Unitary{sigma_x()}), GateSpec(Unitary{sigma_x()}),
                         std::nullopt};
        CHECK(classify(s).kind == VerdictKind::Compliant);
    }
    SECTION("scenario 3 with global conjugation violates jointly but not locally") {
        const auto s = canonical_scenario(Axis::Y, global_conjugation_extension());
        const auto v = classify(s);
        CHECK(v.kind == VerdictKind::ViolationB);
        CHECK(v.joint_distance == Catch::Approx(1.0).margin(1e-10));
        CHECK(v.marginal_distance_a <= 1e-10);
        CHECK(v.marginal_distance_b <= 1e-10);
        // Projector oracle: opposite orders give the y-correlated and
        // y-anti-correlated mixtures respectively.
        const Mat ab = run_order(s, OpOrder::AliceThenBob);
        const Mat ba = run_order(s, OpOrder::BobThenAlice);
        CHECK(trace_distance(ab, y_correlated_mixture()) <= 1e-12);
        const Mat y_anti = 0.5 * tensor(ket_plus_y(), ket_minus_y()).projector() +
                           0.5 * tensor(ket_minus_y(), ket_plus_y()).projector();
        CHECK(trace_distance(ba, y_anti) <= 1e-12);
    }
    SECTION("scenarios 1 and 2 with global conjugation stay compliant") {
        CHECK(classify(canonical_scenario(Axis::Z, global_conjugation_extension())).kind ==
              VerdictKind::Compliant);
        CHECK(classify(canonical_scenario(Axis::X, global_conjugation_extension())).kind ==
              VerdictKind::Compliant);
    }
    SECTION("partial transposition keeps all three scenarios compliant") {
        for (const Axis axis : {Axis::Z, Axis::X, Axis::Y}) {
            const auto v = classify(canonical_scenario(axis, partial_transpose_extension()));
            CHECK(v.kind == VerdictKind::Compliant);
        }
    }
    SECTION("a marginal-moving rule yields violation (a)") {
        // Hypothesis mapping every state to |00><00|, as a coefficient map.
        Eigen::MatrixXd collapse = Eigen::MatrixXd::Zero(16, 16);
        const Eigen::VectorXd target = pauli_coefficients(tensor(ket0(), ket0()).projector());
        for (int m = 0; m < 16; ++m) collapse(m, 0) = 2.0 * target(m);
        collapse.row(0).setZero();
        collapse(0, 0) = 1.0;
        const auto s = canonical_scenario(Axis::Z, pauli_map_extension("collapse", collapse));
        const auto v = classify(s);
        CHECK(v.kind == VerdictKind::ViolationA);
        CHECK(v.marginal_distance_a > 1e-9);
    }
    SECTION("random kraus scenario sweep always complies") {
        auto rng = random::seeded(44);
        for (int i = 0; i < 1000; ++i) {
            const Scenario s{random::random_density(4, rng),
                             GateSpec(KrausChannel{random::random_kraus(2, 2, rng)}),
                             GateSpec(KrausChannel{random::random_kraus(2, 2, rng)}),
                             std::nullopt};
            CHECK(classify(s).joint_distance <= 1e-10);
        }
    }
}

TEST_CASE("pre-measurement constraint on hypothesized joint states", "[timeorder]") {
    const auto constraint = omega_constraint(canonical_scenario(Axis::Z));
    SECTION("accepts the singlet") { CHECK(constraint.accepts(singlet().projector())); }
    SECTION("accepts the uniform phase mixture") {
        CHECK(constraint.accepts(z_anticorrelated_mixture()));
    }
    SECTION("rejects the wrong correlation") {
        CHECK_FALSE(constraint.accepts(tensor(ket0(), ket0()).projector()));
    }
    SECTION("requires a measurement on Alice's side") {
        const Scenario s{DensityOperator::from_ket(singlet()),
                         GateSpec(KrausChannel{{identity(2)}}), GateSpec(Conjugation{}),
                         std::nullopt};
        CHECK_THROWS_AS(omega_constraint(s), std::invalid_argument);
    }
    SECTION("accepts the opposite-order result of every compliant scenario") {
        for (const Axis axis : {Axis::Z, Axis::X, Axis::Y}) {
            const auto s = canonical_scenario(axis, partial_transpose_extension());
            REQUIRE(classify(s).kind == VerdictKind::Compliant);
            CHECK(omega_constraint(s).accepts(run_order(s, OpOrder::BobThenAlice)));
        }
    }
}

TEST_CASE("single-order signaling cross-check", "[timeorder]") {
    SECTION("scenario 1 sends no signal either way") {
        const auto check = rc_cross_check(canonical_scenario(Axis::Z));
        CHECK_FALSE(check.signals);
        CHECK(check.alice_to_bob <= 1e-12);
        CHECK(check.bob_to_alice <= 1e-12);
    }
    SECTION("identity operations send no signal") {
        const Scenario s{DensityOperator::from_ket(singlet()),
                         GateSpec(KrausChannel{{identity(2)}}),
                         GateSpec(Unitary{identity(2)}), std::nullopt};
        CHECK_FALSE(rc_cross_check(s).signals);
    }
    SECTION("the joint-order violation is invisible to the single-order check") {
        const auto s = canonical_scenario(Axis::Y, global_conjugation_extension());
        CHECK_FALSE(rc_cross_check(s).signals);
        CHECK(classify(s).kind == VerdictKind::ViolationB);
    }
    SECTION("a marginal-moving hypothesis does signal") {
        Eigen::MatrixXd collapse = Eigen::MatrixXd::Zero(16, 16);
        const Eigen::VectorXd target = pauli_coefficients(tensor(ket0(), ket0()).projector());
        for (int m = 0; m < 16; ++m) collapse(m, 0) = 2.0 * target(m);
        collapse.row(0).setZero();
        collapse(0, 0) = 1.0;
        const auto s = canonical_scenario(Axis::Z, pauli_map_extension("collapse", collapse));
        REQUIRE(classify(s).kind == VerdictKind::ViolationA);
        CHECK(rc_cross_check(s).signals);
    }
}
