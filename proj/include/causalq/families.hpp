#pragma once

// The three one-parameter solution families of the time-order thought
// experiments, their closed-form convex hulls, and the intersection
// certificates.
//
// Each family is the convex hull of the projector circle
// |(u + e^{i phase} v)/sqrt(2)>, which in the (u, v) basis is exactly the
// operators with support in span{u, v}, both diagonal entries 1/2, and
// off-diagonal magnitude at most 1/2. Membership is tested in that closed
// form rather than by sampling. Reparametrizing either basis ket by a
// global phase leaves the hull unchanged.

#include "causalq/gates.hpp"
#include "causalq/qlin.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace causalq::families {

using qlin::Axis;
using qlin::Cx;
using qlin::Ket;
using qlin::Mat;
using qlin::Vec;

enum class FamilyLabel { A1, A2, A3 };

inline const char* to_string(FamilyLabel l) {
    switch (l) {
        case FamilyLabel::A1: return "A1";
        case FamilyLabel::A2: return "A2";
        default: return "A3";
    }
}

struct PhaseFamily {
    FamilyLabel label;
    Ket first;   // support-plane basis, order as defined
    Ket second;
    std::string phase_symbol;
    Axis axis;                    // the measurement axis that generates the family
    double required_correlation;  // joint Pauli correlation of every member
};

inline PhaseFamily family(FamilyLabel label) {
    using namespace qlin;
    switch (label) {
        case FamilyLabel::A1:
            return {label, tensor(ket0(), ket1()), tensor(ket1(), ket0()), "alpha", Axis::Z, -1.0};
        case FamilyLabel::A2:
            return {label, tensor(ket_plus_x(), ket_minus_x()), tensor(ket_minus_x(), ket_plus_x()),
                    "beta", Axis::X, -1.0};
        default:
            return {label, tensor(ket_plus_y(), ket_plus_y()), tensor(ket_minus_y(), ket_minus_y()),
                    "delta", Axis::Y, +1.0};
    }
}

inline const std::array<PhaseFamily, 3>& all_families() {
    static const std::array<PhaseFamily, 3> fams = {
        family(FamilyLabel::A1), family(FamilyLabel::A2), family(FamilyLabel::A3)};
    return fams;
}

/// (first + e^{i phase} second)/sqrt(2); out-of-range phases wrap mod 2 pi.
inline Ket family_state(const PhaseFamily& f, double phase) {
    phase = std::fmod(phase, 2.0 * M_PI);
    if (phase < 0.0) phase += 2.0 * M_PI;
    const Vec v = (f.first.vector() + std::exp(Cx(0, phase)) * f.second.vector()) / M_SQRT2;
    return Ket(v);
}

/// Uniform phase mixture, the family's centroid: (P_first + P_second)/2.
inline Mat family_centroid(const PhaseFamily& f) {
    return (f.first.projector() + f.second.projector()) / 2.0;
}

/// Closed-form convex-hull membership for unit-trace Hermitian candidates.
inline bool membership(const PhaseFamily& f, const Mat& w, double tol = 1e-9) {
    const Mat plane = f.first.projector() + f.second.projector();
    if ((w - plane * w * plane).cwiseAbs().maxCoeff() > tol) return false;
    const Cx duu = f.first.vector().adjoint() * w * f.first.vector();
    const Cx dvv = f.second.vector().adjoint() * w * f.second.vector();
    if (std::abs(duu - 0.5) > tol || std::abs(dvv - 0.5) > tol) return false;
    const Cx off = f.first.vector().adjoint() * w * f.second.vector();
    if (std::abs(off) > 0.5 + tol) return false;
    Eigen::SelfAdjointEigenSolver<Mat> es((w + w.adjoint().eval()) / 2.0, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

struct CorrelationSignature {
    Axis axis;
    double correlation;  // Tr(w sigma_axis x sigma_axis)
    double local_a;      // Tr(w sigma_axis x I)
    double local_b;      // Tr(w I x sigma_axis)
};

inline CorrelationSignature correlation_signature(const PhaseFamily& f, const Mat& w) {
    return {f.axis, qlin::pauli_correlation(w, f.axis, f.axis),
            qlin::local_bloch(w, qlin::Subsystem::A, f.axis),
            qlin::local_bloch(w, qlin::Subsystem::B, f.axis)};
}

enum class IntersectionKind { UniqueState, FullFamily, Empty };

struct IntersectionResult {
    IntersectionKind kind = IntersectionKind::Empty;
    std::vector<Mat> members;  // the unique state, or representative members
    int constraint_rank = 0;
    int nullspace_dim = 0;
    double residual = 0.0;
};

namespace detail {

/// Rows of the affine constraint system "support within the family plane
/// and both family-basis diagonal entries 1/2" over the real Pauli
/// coefficient space.
inline void append_family_constraints(const PhaseFamily& f, std::vector<Eigen::RowVectorXd>& rows,
                                      std::vector<double>& rhs) {
    const auto& basis = qlin::hermitian_basis4();
    const Mat plane = f.first.projector() + f.second.projector();
    for (int m = 0; m < 16; ++m) {
        Eigen::RowVectorXd row(16);
        for (int n = 0; n < 16; ++n) {
            const Mat leak = basis[n] - plane * basis[n] * plane;
            row(n) = (basis[m] * leak).trace().real();
        }
        rows.push_back(row);
        rhs.push_back(0.0);
    }
    for (const Ket* k : {&f.first, &f.second}) {
        Eigen::RowVectorXd row(16);
        for (int n = 0; n < 16; ++n) {
            row(n) = (k->vector().adjoint() * basis[n] * k->vector()).real()(0, 0);
        }
        rows.push_back(row);
        rhs.push_back(0.5);
    }
}

}  // namespace detail

/// Solves the joint constraint system of two families exactly. For distinct
/// families the support planes meet in a line, pinning a unique candidate,
/// which is then validated against both membership predicates.
inline IntersectionResult pairwise_intersection(const PhaseFamily& f, const PhaseFamily& g,
                                                double tol = 1e-9) {
    IntersectionResult out;
    std::vector<Eigen::RowVectorXd> rows;
    std::vector<double> rhs;
    detail::append_family_constraints(f, rows, rhs);
    if (f.label != g.label) detail::append_family_constraints(g, rows, rhs);

    Eigen::MatrixXd a(static_cast<Eigen::Index>(rows.size()), 16);
    Eigen::VectorXd b(static_cast<Eigen::Index>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        a.row(static_cast<Eigen::Index>(i)) = rows[i];
        b(static_cast<Eigen::Index>(i)) = rhs[i];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smax = svd.singularValues()(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > 1e-10 * smax) ++rank;
    }
    out.constraint_rank = rank;
    out.nullspace_dim = 16 - rank;
    const Eigen::VectorXd c = svd.solve(b);
    out.residual = (a * c - b).norm();

    if (f.label == g.label) {
        out.kind = IntersectionKind::FullFamily;
        for (const double phase : {0.0, M_PI_2, M_PI, 3.0 * M_PI_2}) {
            out.members.push_back(family_state(f, phase).projector());
        }
        return out;
    }

    Mat w = qlin::from_pauli_coefficients(c);
    w = (w + w.adjoint().eval()) / 2.0;
    if (out.nullspace_dim == 0 && out.residual <= tol && membership(f, w, tol) &&
        membership(g, w, tol)) {
        out.kind = IntersectionKind::UniqueState;
        out.members.push_back(w);
    } else {
        out.kind = IntersectionKind::Empty;
    }
    return out;
}

inline IntersectionResult pairwise_intersection(FamilyLabel f, FamilyLabel g, double tol = 1e-9) {
    return pairwise_intersection(family(f), family(g), tol);
}

struct EmptinessCertificate {
    bool empty = false;
    double witness_gap = 0.0;   // clash between required and actual correlation
    Mat a1_a2_member;           // the unique common solution of the first two families
    long grid_points_checked = 0;
    long counterexamples = 0;       // grid states inside all three hulls
    long other_family_hits = 0;     // grid states inside any other hull
};

/// Constructive emptiness proof for the triple intersection: the unique
/// member of the first two hulls carries the wrong correlation sign for the
/// third, and a dense mixture grid over each family confirms that no
/// sampled state lies in the other two hulls.
inline EmptinessCertificate triple_intersection_empty() {
    EmptinessCertificate cert;
    const auto a12 = pairwise_intersection(FamilyLabel::A1, FamilyLabel::A2);
    if (a12.kind != IntersectionKind::UniqueState) return cert;
    cert.a1_a2_member = a12.members.front();

    const PhaseFamily f3 = family(FamilyLabel::A3);
    const auto sig = correlation_signature(f3, cert.a1_a2_member);
    cert.witness_gap = std::abs(f3.required_correlation - sig.correlation);
    const bool analytic_empty =
        cert.witness_gap > 1e-6 && !membership(f3, cert.a1_a2_member);

    // Mixture grid per family: distinct phases (second grid offset by a half
    // step) and interior mixing weights, so every sampled state is strictly
    // mixed and can only lie in another family by genuinely sharing support.
    constexpr int kPhases = 25;
    constexpr int kWeights = 16;
    for (const auto& f : all_families()) {
        std::array<const PhaseFamily*, 2> others{};
        int n_others = 0;
        for (const auto& o : all_families()) {
            if (o.label != f.label) others[n_others++] = &o;
        }
        for (int p1 = 0; p1 < kPhases; ++p1) {
            for (int p2 = 0; p2 < kPhases; ++p2) {
                const double phi1 = 2.0 * M_PI * p1 / kPhases;
                const double phi2 = 2.0 * M_PI * (p2 + 0.5) / kPhases;
                const Mat proj1 = family_state(f, phi1).projector();
                const Mat proj2 = family_state(f, phi2).projector();
                for (int t = 1; t <= kWeights; ++t) {
                    const double weight = static_cast<double>(t) / (kWeights + 1);
                    const Mat w = weight * proj1 + (1.0 - weight) * proj2;
                    ++cert.grid_points_checked;
                    const bool in0 = membership(*others[0], w, 1e-6);
                    const bool in1 = membership(*others[1], w, 1e-6);
                    if (in0 || in1) ++cert.other_family_hits;
                    if (in0 && in1) ++cert.counterexamples;
                }
            }
        }
    }
    cert.empty = analytic_empty && cert.counterexamples == 0;
    return cert;
}

}  // namespace causalq::families
