#pragma once

// Semantics of the local operations the laboratory supports: unitaries,
// computational-basis complex conjugation, anti-unitary composites, Kraus
// channels, and projective measurements.
//
// Conjugation is fixed by its action in the computational basis,
// K|psi> = |psi>*; other bases inherit the action through linear
// combinations with conjugated coefficients. Its action on a qubit that is
// entangled with another system is deliberately left undefined at this
// layer; hypothesized joint-state extensions live in timeorder.hpp.

#include "causalq/qlin.hpp"

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace causalq::gates {

using qlin::Cx;
using qlin::DensityOperator;
using qlin::Ket;
using qlin::Mat;
using qlin::Vec;

enum class Side { A, B, Whole };
enum class GateKind { Unitary, Conjugation, AntiUnitary, Kraus, Measurement };

struct Unitary {
    Mat matrix;
};

struct Conjugation {};

/// A unitary applied after computational-basis conjugation (E = U K).
struct AntiUnitary {
    Mat unitary;
};

struct KrausChannel {
    std::vector<Mat> elements;
};

struct ProjectiveMeasurement {
    std::vector<Ket> basis;  // orthonormal, spans the measured factor
};

inline ProjectiveMeasurement axis_measurement(qlin::Axis axis) {
    switch (axis) {
        case qlin::Axis::Z: return {{qlin::ket0(), qlin::ket1()}};
        case qlin::Axis::X: return {{qlin::ket_plus_x(), qlin::ket_minus_x()}};
        case qlin::Axis::Y: return {{qlin::ket_plus_y(), qlin::ket_minus_y()}};
    }
    throw std::invalid_argument("axis_measurement: invalid axis tag");
}

/// Tagged description of a local operation. Construction validates the
/// kind-specific invariants and throws std::invalid_argument on violation.
class GateSpec {
  public:
    GateSpec(Unitary u) : payload_(std::move(u)) {
        const Mat& m = std::get<Unitary>(payload_).matrix;
        qlin::require_qubit_dim(m.rows(), "Unitary");
        if (m.rows() != m.cols() ||
            (m.adjoint() * m - qlin::identity(static_cast<int>(m.rows())))
                    .cwiseAbs()
                    .maxCoeff() > 1e-10) {
            throw std::invalid_argument("Unitary: matrix is not unitary");
        }
    }

    GateSpec(Conjugation c) : payload_(c) {}

    GateSpec(AntiUnitary a) : payload_(std::move(a)) {
        const Mat& m = std::get<AntiUnitary>(payload_).unitary;
        if (m.rows() != 2 || m.cols() != 2 ||
            (m.adjoint() * m - qlin::identity(2)).cwiseAbs().maxCoeff() > 1e-10) {
            throw std::invalid_argument("AntiUnitary: dressing must be a 2x2 unitary");
        }
    }

    GateSpec(KrausChannel k) : payload_(std::move(k)) {
        const auto& els = std::get<KrausChannel>(payload_).elements;
        if (els.empty()) throw std::invalid_argument("Kraus: element list is empty");
        const Eigen::Index d = els.front().rows();
        qlin::require_qubit_dim(d, "Kraus");
        Mat sum = Mat::Zero(d, d);
        for (const Mat& a : els) {
            if (a.rows() != d || a.cols() != d) {
                throw std::invalid_argument("Kraus: elements have mismatched dimensions");
            }
            sum += a.adjoint() * a;
        }
        if ((sum - qlin::identity(static_cast<int>(d))).cwiseAbs().maxCoeff() > 1e-10) {
            throw std::invalid_argument("Kraus: completeness sum A_k^dag A_k != I");
        }
    }

    GateSpec(ProjectiveMeasurement m) : payload_(std::move(m)) {
        const auto& basis = std::get<ProjectiveMeasurement>(payload_).basis;
        if (basis.empty()) throw std::invalid_argument("Measurement: empty basis");
        const int d = basis.front().dim();
        if (static_cast<int>(basis.size()) != d) {
            throw std::invalid_argument("Measurement: basis does not span the factor");
        }
        for (size_t i = 0; i < basis.size(); ++i) {
            for (size_t j = 0; j < basis.size(); ++j) {
                const Cx ip = basis[i].vector().adjoint() * basis[j].vector();
                const double want = i == j ? 1.0 : 0.0;
                if (std::abs(ip - want) > 1e-10) {
                    throw std::invalid_argument("Measurement: basis is not orthonormal");
                }
            }
        }
    }

    GateKind kind() const {
        switch (payload_.index()) {
            case 0: return GateKind::Unitary;
            case 1: return GateKind::Conjugation;
            case 2: return GateKind::AntiUnitary;
            case 3: return GateKind::Kraus;
            default: return GateKind::Measurement;
        }
    }

    bool is_antilinear() const {
        return kind() == GateKind::Conjugation || kind() == GateKind::AntiUnitary;
    }

    template <typename T>
    const T& as() const {
        return std::get<T>(payload_);
    }

  private:
    std::variant<Unitary, Conjugation, AntiUnitary, KrausChannel, ProjectiveMeasurement> payload_;
};

struct Outcome {
    double probability = 0.0;
    // Null for zero-probability branches; the conditional state is never
    // obtained by dividing through.
    std::optional<DensityOperator> post_state;
};

struct MeasurementRecord {
    std::vector<Outcome> outcomes;
    DensityOperator nonselective;
};

// Probability below this is treated as an unrealized branch.
inline constexpr double kZeroProb = 1e-14;

inline Mat embed(const Mat& local, Side side) {
    if (side == Side::Whole) return local;
    return side == Side::A ? qlin::tensor(local, qlin::identity(2))
                           : qlin::tensor(qlin::identity(2), local);
}

/// Applies a reversible gate to a pure state. Conjugation and anti-unitary
/// gates are defined on single qubits only.
inline Ket apply_pure(const GateSpec& g, const Ket& psi) {
    switch (g.kind()) {
        case GateKind::Unitary: {
            const Mat& u = g.as<Unitary>().matrix;
            if (u.rows() != psi.dim()) {
                throw std::invalid_argument("apply_pure: unitary dimension mismatch");
            }
            return Ket(u * psi.vector());
        }
        case GateKind::Conjugation:
            if (psi.dim() != 2) {
                throw std::domain_error(
                    "apply_pure: conjugation is undefined on a two-qubit ket");
            }
            return Ket(psi.vector().conjugate());
        case GateKind::AntiUnitary: {
            if (psi.dim() != 2) {
                throw std::domain_error(
                    "apply_pure: anti-unitary gates are undefined on a two-qubit ket");
            }
            return Ket(g.as<AntiUnitary>().unitary * psi.vector().conjugate());
        }
        default:
            throw std::invalid_argument("apply_pure: gate is not a reversible pure-state map");
    }
}

/// Raw Kraus application on an arbitrary (possibly non-positive) Hermitian
/// operator; used by the time-order harness.
inline Mat apply_kraus(const std::vector<Mat>& elements, const Mat& state, Side side) {
    Mat out = Mat::Zero(state.rows(), state.cols());
    for (const Mat& a : elements) {
        const Mat e = state.rows() == 4 && a.rows() == 2 ? embed(a, side) : a;
        if (e.rows() != state.rows()) {
            throw std::invalid_argument("apply_kraus: element dimension mismatch");
        }
        out += e * state * e.adjoint();
    }
    return out;
}

inline DensityOperator apply_channel(const GateSpec& g, const DensityOperator& rho, Side side) {
    if (g.kind() != GateKind::Kraus) {
        throw std::invalid_argument("apply_channel: gate is not a Kraus channel");
    }
    return DensityOperator(apply_kraus(g.as<KrausChannel>().elements, rho.matrix(), side));
}

/// Nonselective projection sum over the basis, valid for any Hermitian input.
inline Mat dephase(const ProjectiveMeasurement& m, const Mat& state, Side side) {
    Mat out = Mat::Zero(state.rows(), state.cols());
    for (const Ket& b : m.basis) {
        const Mat p = state.rows() == 4 ? embed(b.projector(), side) : b.projector();
        out += p * state * p;
    }
    return out;
}

inline MeasurementRecord measure(const ProjectiveMeasurement& m, const DensityOperator& rho,
                                 Side side) {
    if (side == Side::Whole) throw std::invalid_argument("measure: side must be A or B");
    if (rho.dim() == 2 && m.basis.front().dim() != 2) {
        throw std::invalid_argument("measure: basis does not span the measured factor");
    }
    MeasurementRecord rec{{}, rho};
    Mat nonselective = Mat::Zero(rho.dim(), rho.dim());
    for (const Ket& b : m.basis) {
        const Mat p = rho.dim() == 4 ? embed(b.projector(), side) : b.projector();
        const Mat branch = p * rho.matrix() * p;
        const double prob = branch.trace().real();
        nonselective += branch;
        Outcome o;
        o.probability = std::max(prob, 0.0);
        if (prob > kZeroProb) o.post_state = DensityOperator(branch / prob);
        rec.outcomes.push_back(std::move(o));
    }
    rec.nonselective = DensityOperator(nonselective);
    return rec;
}

/// Push-forward of a single-qubit mixed state through a conjugation-bearing
/// gate: U conj(rho) U^dag. Applying the gate memberwise to any pure
/// decomposition of rho gives the same operator.
inline DensityOperator pushforward_density(const GateSpec& g, const DensityOperator& rho) {
    if (rho.dim() != 2) {
        throw std::domain_error("pushforward_density: undefined on entangled systems");
    }
    switch (g.kind()) {
        case GateKind::Conjugation: return DensityOperator(rho.matrix().conjugate());
        case GateKind::AntiUnitary: {
            const Mat& u = g.as<AntiUnitary>().unitary;
            return DensityOperator(u * rho.matrix().conjugate() * u.adjoint());
        }
        default:
            throw std::invalid_argument("pushforward_density: gate is not antilinear");
    }
}

}  // namespace causalq::gates
