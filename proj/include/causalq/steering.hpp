#pragma once

// Remote ensemble preparation by local measurement, and the two
// no-signaling verdicts: ensemble indistinguishability under
// conjugation-bearing gates and Kraus marginal invariance.

#include "causalq/gates.hpp"
#include "causalq/qlin.hpp"
#include "causalq/random.hpp"

#include <stdexcept>
#include <vector>

namespace causalq::steering {

using gates::GateKind;
using gates::GateSpec;
using qlin::Cx;
using qlin::DensityOperator;
using qlin::Ket;
using qlin::Mat;
using qlin::Vec;

struct WeightedKet {
    double weight;
    Ket state;
};

/// A finite pure-state preparation of a single-qubit density operator.
class Ensemble {
  public:
    explicit Ensemble(std::vector<WeightedKet> members) : members_(std::move(members)) {
        if (members_.empty()) throw std::invalid_argument("Ensemble: no members");
        double total = 0.0;
        for (const auto& m : members_) {
            if (m.weight < 0.0) throw std::invalid_argument("Ensemble: negative weight");
            if (m.state.dim() != 2) {
                throw std::invalid_argument("Ensemble: members must be single-qubit kets");
            }
            total += m.weight;
        }
        if (std::abs(total - 1.0) > 1e-10) {
            throw std::invalid_argument("Ensemble: weights do not sum to 1");
        }
    }

    const std::vector<WeightedKet>& members() const { return members_; }

  private:
    std::vector<WeightedKet> members_;
};

inline DensityOperator mix(const Ensemble& e) {
    Mat rho = Mat::Zero(2, 2);
    for (const auto& m : e.members()) rho += m.weight * m.state.projector();
    return DensityOperator((rho + rho.adjoint().eval()) / 2.0);
}

// Deterministic phase convention: first amplitude of nonnegligible magnitude
// is made real positive.
inline Ket fix_phase(Vec v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-10) {
            v *= std::conj(v(i)) / std::abs(v(i));
            break;
        }
    }
    return Ket(v / v.norm());
}

/// Bob's ensemble conditioned on Alice measuring `alice_basis` on her half
/// of rho_ab. Mixed conditional states are spectrally decomposed into pure
/// members, eigenvalues descending.
inline Ensemble steer(const DensityOperator& rho_ab,
                      const gates::ProjectiveMeasurement& alice_basis) {
    if (rho_ab.dim() != 4) throw std::invalid_argument("steer: expected a two-qubit state");
    std::vector<WeightedKet> members;
    for (const Ket& a : alice_basis.basis) {
        // <a| rho |a> on the A factor: a 2x2 operator of trace p(a).
        Mat cond = Mat::Zero(2, 2);
        for (Eigen::Index i = 0; i < 2; ++i)
            for (Eigen::Index k = 0; k < 2; ++k)
                for (Eigen::Index j = 0; j < 2; ++j)
                    for (Eigen::Index l = 0; l < 2; ++l)
                        cond(j, l) += std::conj(a.vector()(i)) * a.vector()(k) *
                                      rho_ab.matrix()(2 * i + j, 2 * k + l);
        const double prob = cond.trace().real();
        if (prob <= gates::kZeroProb) continue;
        const Eigen::SelfAdjointEigenSolver<Mat> es((cond + cond.adjoint().eval()) / 2.0);
        for (Eigen::Index k = es.eigenvalues().size() - 1; k >= 0; --k) {
            const double lambda = es.eigenvalues()(k) / prob;
            if (lambda <= 1e-12) continue;
            members.push_back({prob * lambda, fix_phase(es.eigenvectors().col(k))});
        }
    }
    return Ensemble(std::move(members));
}

/// Memberwise gate application with unchanged weights.
inline Ensemble pushforward_ensemble(const GateSpec& g, const Ensemble& e) {
    std::vector<WeightedKet> out;
    for (const auto& m : e.members()) out.push_back({m.weight, gates::apply_pure(g, m.state)});
    return Ensemble(std::move(out));
}

struct EnsembleCheck {
    bool distinguishable = false;
    double distance = 0.0;
};

/// Can Bob tell which of two preparations of the same density operator was
/// delivered, once he pushes each through g?
inline EnsembleCheck rc_ensemble_check(const GateSpec& g, const Ensemble& e1, const Ensemble& e2,
                                       double tol = 1e-9) {
    if (qlin::trace_distance(mix(e1), mix(e2)) > tol) {
        throw std::invalid_argument(
            "rc_ensemble_check: ensembles decompose different density operators");
    }
    const double d =
        qlin::trace_distance(mix(pushforward_ensemble(g, e1)), mix(pushforward_ensemble(g, e2)));
    return {d > tol, d};
}

struct MarginalCheck {
    bool signals = false;
    double distance = 0.0;
};

inline std::vector<Mat> as_kraus_elements(const GateSpec& g) {
    switch (g.kind()) {
        case GateKind::Kraus: return g.as<gates::KrausChannel>().elements;
        case GateKind::Unitary: return {g.as<gates::Unitary>().matrix};
        case GateKind::Measurement: {
            std::vector<Mat> els;
            for (const Ket& b : g.as<gates::ProjectiveMeasurement>().basis)
                els.push_back(b.projector());
            return els;
        }
        default:
            throw std::invalid_argument("as_kraus_elements: gate has no Kraus form");
    }
}

/// Does a local channel on `side` move the other party's reduced state?
inline MarginalCheck rc_marginal_check(const GateSpec& g, const DensityOperator& rho_ab,
                                       gates::Side side = gates::Side::A, double tol = 1e-9) {
    const auto remote = side == gates::Side::A ? qlin::Subsystem::A : qlin::Subsystem::B;
    const Mat before = qlin::partial_trace(rho_ab.matrix(), remote);
    const Mat after =
        qlin::partial_trace(gates::apply_kraus(as_kraus_elements(g), rho_ab.matrix(), side), remote);
    const double d = qlin::trace_distance(before, after);
    return {d > tol, d};
}

/// Random alternative decomposition of rho with `members` entries, built by
/// mixing the root-weighted spectral members through a Haar isometry.
inline Ensemble random_decomposition(const DensityOperator& rho, int members, random::Rng& rng) {
    const Eigen::SelfAdjointEigenSolver<Mat> es(rho.matrix());
    std::vector<Vec> spectral;
    std::vector<double> lambda;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        if (es.eigenvalues()(k) > 1e-12) {
            spectral.push_back(es.eigenvectors().col(k));
            lambda.push_back(es.eigenvalues()(k));
        }
    }
    const int r = static_cast<int>(spectral.size());
    if (members < r) members = r;
    // Columns of a Haar unitary restricted to the first r give an isometry.
    const Mat q = random::random_unitary(members, rng).leftCols(r);
    std::vector<WeightedKet> out;
    for (int j = 0; j < members; ++j) {
        Vec un = Vec::Zero(rho.dim());
        for (int i = 0; i < r; ++i) un += q(j, i) * std::sqrt(lambda[i]) * spectral[i];
        const double w = un.squaredNorm();
        if (w <= 1e-14) continue;
        out.push_back({w, fix_phase(un)});
    }
    // Round-off can leave the weights a hair off 1; renormalize.
    double total = 0.0;
    for (const auto& m : out) total += m.weight;
    for (auto& m : out) m.weight /= total;
    return Ensemble(std::move(out));
}

}  // namespace causalq::steering
