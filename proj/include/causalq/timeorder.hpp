#pragma once

// Two-party spacelike-operation harness: run Alice's and Bob's local
// operations in both time orders, compare the final joint states, and
// classify the outcome.
//
// A conjugation-bearing gate has a defined joint action only where the
// memberwise pure-state rule determines it, i.e. on non-entangled states,
// where it reduces to partial transposition of the acted-on factor
// (dressed by the unitary part). On entangled states the joint action is
// an open hypothesis: callers supply an ExtensionRule and the harness
// evaluates it. Extension outputs are required to be Hermitian with unit
// trace but not positive; positivity is reported separately.

#include "causalq/gates.hpp"
#include "causalq/qlin.hpp"
#include "causalq/steering.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace causalq::timeorder {

using gates::GateKind;
using gates::GateSpec;
using gates::Side;
using qlin::DensityOperator;
using qlin::Ket;
using qlin::Mat;

/// A hypothesized action of a pure-state-only gate on an entangled joint
/// state. The map must preserve Hermiticity and trace.
struct ExtensionRule {
    std::string name;
    std::function<Mat(const Mat&)> map;
    // Present for user-defined rules given as Pauli coefficient maps; kept
    // so scenarios serialize back out unchanged.
    std::optional<Eigen::MatrixXd> coefficient_map;
};

inline ExtensionRule identity_extension() {
    return {"identity-on-joint", [](const Mat& w) { return w; }};
}

/// Entrywise conjugation of the joint matrix in the computational basis.
inline ExtensionRule global_conjugation_extension() {
    return {"global-conjugation", [](const Mat& w) { return Mat(w.conjugate()); }};
}

/// Transposition of the B factor alone; coincides with the memberwise rule
/// on separable states and extends it to entangled ones.
inline ExtensionRule partial_transpose_extension() {
    return {"partial-transpose-b",
            [](const Mat& w) { return qlin::partial_transpose(w, qlin::Subsystem::B); }};
}

/// User-defined rule given as a real-linear map on the Pauli coefficient
/// vector (hermitian_basis4 order). The trace row must be the identity row
/// so the map is trace preserving.
inline ExtensionRule pauli_map_extension(std::string name, const Eigen::MatrixXd& coeff_map) {
    if (coeff_map.rows() != 16 || coeff_map.cols() != 16) {
        throw std::invalid_argument("pauli_map_extension: expected a 16x16 real matrix");
    }
    Eigen::RowVectorXd trace_row = Eigen::RowVectorXd::Zero(16);
    trace_row(0) = 1.0;
    if ((coeff_map.row(0) - trace_row).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("pauli_map_extension: map does not preserve trace");
    }
    Eigen::MatrixXd m = coeff_map;
    return {std::move(name),
            [m](const Mat& w) {
                return qlin::from_pauli_coefficients(m * qlin::pauli_coefficients(w));
            },
            std::move(m)};
}

enum class OpOrder { AliceThenBob, BobThenAlice };

struct Scenario {
    DensityOperator initial;
    GateSpec alice_op;  // measurement or channel on A
    GateSpec bob_op;    // any local operation on B
    std::optional<ExtensionRule> bob_extension;
};

/// Exact at two qubits: entangled iff the B-transposed state has a negative
/// eigenvalue.
inline bool is_entangled(const Mat& rho, double tol = 1e-10) {
    const Mat pt = qlin::partial_transpose(rho, qlin::Subsystem::B);
    Eigen::SelfAdjointEigenSolver<Mat> es(pt, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() < -tol;
}

namespace detail {

inline void require_local_sides(const Scenario& s) {
    const auto alice_kind = s.alice_op.kind();
    if (alice_kind != GateKind::Measurement && alice_kind != GateKind::Kraus &&
        alice_kind != GateKind::Unitary) {
        throw std::invalid_argument("Scenario: Alice's operation must be a measurement or channel");
    }
}

inline Mat apply_alice(const GateSpec& g, const Mat& state) {
    if (g.kind() == GateKind::Measurement) {
        return gates::dephase(g.as<gates::ProjectiveMeasurement>(), state, Side::A);
    }
    return gates::apply_kraus(steering::as_kraus_elements(g), state, Side::A);
}

/// Bob's joint action on a (valid) two-qubit density matrix. Defined
/// memberwise where possible; extension hypothesis otherwise.
inline Mat apply_bob(const Scenario& s, const Mat& state) {
    const GateSpec& g = s.bob_op;
    switch (g.kind()) {
        case GateKind::Unitary: {
            const Mat u = gates::embed(g.as<gates::Unitary>().matrix, Side::B);
            return u * state * u.adjoint();
        }
        case GateKind::Kraus:
            return gates::apply_kraus(g.as<gates::KrausChannel>().elements, state, Side::B);
        case GateKind::Measurement:
            return gates::dephase(g.as<gates::ProjectiveMeasurement>(), state, Side::B);
        case GateKind::Conjugation:
        case GateKind::AntiUnitary: {
            Mat core;
            if (!is_entangled(state)) {
                core = qlin::partial_transpose(state, qlin::Subsystem::B);
            } else if (s.bob_extension) {
                core = s.bob_extension->map(state);
            } else {
                throw std::domain_error(
                    "run_order: conjugation on an entangled joint state needs an extension rule");
            }
            if (g.kind() == GateKind::AntiUnitary) {
                const Mat u = gates::embed(g.as<gates::AntiUnitary>().unitary, Side::B);
                core = u * core * u.adjoint();
            }
            return core;
        }
    }
    throw std::logic_error("apply_bob: unreachable");
}

}  // namespace detail

/// Final (nonselective) joint state after both operations in the given
/// order. The result is Hermitian with unit trace; it is a valid density
/// operator unless an extension rule produced a non-positive intermediate.
inline Mat run_order(const Scenario& s, OpOrder order) {
    detail::require_local_sides(s);
    if (order == OpOrder::AliceThenBob) {
        if (s.alice_op.kind() == GateKind::Measurement && s.bob_op.is_antilinear()) {
            // Branch by Alice's outcome: each branch is a product state, so
            // Bob's gate acts on a defined single-qubit state.
            const auto rec =
                gates::measure(s.alice_op.as<gates::ProjectiveMeasurement>(), s.initial, Side::A);
            const auto& basis = s.alice_op.as<gates::ProjectiveMeasurement>().basis;
            Mat out = Mat::Zero(4, 4);
            for (size_t k = 0; k < rec.outcomes.size(); ++k) {
                const auto& o = rec.outcomes[k];
                if (!o.post_state) continue;
                const DensityOperator cond =
                    qlin::partial_trace(*o.post_state, qlin::Subsystem::A);
                const DensityOperator pushed = gates::pushforward_density(s.bob_op, cond);
                out += o.probability * qlin::tensor(basis[k].projector(), pushed.matrix());
            }
            return out;
        }
        const Mat after_alice = detail::apply_alice(s.alice_op, s.initial.matrix());
        return detail::apply_bob(s, after_alice);
    }
    const Mat after_bob = detail::apply_bob(s, s.initial.matrix());
    return detail::apply_alice(s.alice_op, after_bob);
}

/// Bob's operation applied alone to the initial state (the hypothesized
/// pre-measurement joint state when Bob goes first).
inline Mat bob_joint_action(const Scenario& s) {
    return detail::apply_bob(s, s.initial.matrix());
}

/// True when both orders can be evaluated without further hypotheses.
inline bool classifiable(const Scenario& s) {
    return !s.bob_op.is_antilinear() || !is_entangled(s.initial.matrix()) ||
           s.bob_extension.has_value();
}

enum class VerdictKind { Compliant, ViolationA, ViolationB };

struct ACVerdict {
    VerdictKind kind = VerdictKind::Compliant;
    double joint_distance = 0.0;
    double marginal_distance_a = 0.0;
    double marginal_distance_b = 0.0;
};

/// Compares the two order results. Compliant when the joint states agree;
/// otherwise violation (a) if a marginal already differs, violation (b) if
/// the difference is invisible to both parties locally.
inline ACVerdict classify(const Scenario& s, double tol = 1e-9) {
    const Mat ab = run_order(s, OpOrder::AliceThenBob);
    const Mat ba = run_order(s, OpOrder::BobThenAlice);
    ACVerdict v;
    v.joint_distance = qlin::trace_distance(ab, ba);
    v.marginal_distance_a = qlin::trace_distance(qlin::partial_trace(ab, qlin::Subsystem::B),
                                                 qlin::partial_trace(ba, qlin::Subsystem::B));
    v.marginal_distance_b = qlin::trace_distance(qlin::partial_trace(ab, qlin::Subsystem::A),
                                                 qlin::partial_trace(ba, qlin::Subsystem::A));
    if (v.joint_distance <= tol) {
        v.kind = VerdictKind::Compliant;
    } else if (v.marginal_distance_a > tol || v.marginal_distance_b > tol) {
        v.kind = VerdictKind::ViolationA;
    } else {
        v.kind = VerdictKind::ViolationB;
    }
    return v;
}

/// The constraint a hypothesized pre-measurement joint state Omega must
/// satisfy: Alice's measurement on Omega has to reproduce the
/// Alice-then-Bob final state.
class OmegaConstraint {
  public:
    OmegaConstraint(gates::ProjectiveMeasurement alice, Mat target)
        : alice_(std::move(alice)), target_(std::move(target)) {}

    bool accepts(const Mat& omega, double tol = 1e-9) const {
        if (omega.rows() != 4 || omega.cols() != 4) return false;
        return qlin::trace_distance(gates::dephase(alice_, omega, Side::A), target_) <= tol;
    }

    /// Minimum eigenvalue of a candidate; lets callers report whether a
    /// hypothesized Omega is a proper quantum state.
    static double min_eigenvalue(const Mat& omega) {
        Eigen::SelfAdjointEigenSolver<Mat> es((omega + omega.adjoint().eval()) / 2.0,
                                              Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }

    const Mat& target() const { return target_; }

  private:
    gates::ProjectiveMeasurement alice_;
    Mat target_;
};

inline OmegaConstraint omega_constraint(const Scenario& s) {
    if (s.alice_op.kind() != GateKind::Measurement) {
        throw std::invalid_argument("omega_constraint: Alice's operation must be a measurement");
    }
    return OmegaConstraint(s.alice_op.as<gates::ProjectiveMeasurement>(),
                           run_order(s, OpOrder::AliceThenBob));
}

struct CrossCheck {
    bool signals = false;
    double alice_to_bob = 0.0;  // movement of Bob's reduced state under Alice's op
    double bob_to_alice = 0.0;  // movement of Alice's reduced state / ensemble distance
};

/// Single-order signaling test for each party's operation, independent of
/// the AC verdict. For a conjugation-bearing Bob gate the test is ensemble
/// indistinguishability across two steered decompositions of his marginal,
/// plus marginal invariance of the joint action where it is defined.
inline CrossCheck rc_cross_check(const Scenario& s, double tol = 1e-9) {
    CrossCheck out;
    out.alice_to_bob = steering::rc_marginal_check(s.alice_op, s.initial, Side::A, tol).distance;

    if (s.bob_op.is_antilinear()) {
        const auto e1 = steering::steer(s.initial, gates::axis_measurement(qlin::Axis::Z));
        const auto e2 = steering::steer(s.initial, gates::axis_measurement(qlin::Axis::X));
        out.bob_to_alice = steering::rc_ensemble_check(s.bob_op, e1, e2, tol).distance;
        if (!is_entangled(s.initial.matrix()) || s.bob_extension) {
            const Mat after_bob = detail::apply_bob(s, s.initial.matrix());
            out.bob_to_alice =
                std::max(out.bob_to_alice,
                         qlin::trace_distance(qlin::partial_trace(after_bob, qlin::Subsystem::B),
                                              qlin::partial_trace(s.initial.matrix(),
                                                                  qlin::Subsystem::B)));
        }
    } else {
        out.bob_to_alice =
            steering::rc_marginal_check(s.bob_op, s.initial, Side::B, tol).distance;
    }
    out.signals = out.alice_to_bob > tol || out.bob_to_alice > tol;
    return out;
}

// The three canonical thought-experiment scenarios: singlet initial state,
// a Pauli measurement by Alice, conjugation by Bob.
inline Scenario canonical_scenario(qlin::Axis alice_axis,
                                   std::optional<ExtensionRule> ext = std::nullopt) {
    return Scenario{DensityOperator::from_ket(qlin::singlet()),
                    GateSpec(gates::axis_measurement(alice_axis)),
                    GateSpec(gates::Conjugation{}), std::move(ext)};
}

}  // namespace causalq::timeorder
