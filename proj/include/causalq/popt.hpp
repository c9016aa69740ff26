#pragma once

// States positive over pure tensors: certification by product-effect
// minimization, the transposed-singlet operator S, and the membership
// notion that replaces positive semidefiniteness with POPT-ness.
//
// For a POPT candidate the hull membership question is operational rather
// than spectral: the candidate must reproduce the family's uniform mixture
// under Alice's measurement (its diagonal blocks in the measurement basis
// are pinned) while the off-diagonal blocks, which the measurement never
// sees, are constrained only by product-effect positivity. On positive
// semidefinite inputs this reduces exactly to the spectral membership test
// of families.hpp.

#include "causalq/families.hpp"
#include "causalq/gates.hpp"
#include "causalq/qlin.hpp"
#include "causalq/random.hpp"
#include "causalq/timeorder.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace causalq::popt {

using qlin::Cx;
using qlin::Ket;
using qlin::Mat;
using qlin::Vec;

/// Bloch-sphere pure state cos(t/2)|0> + e^{i p} sin(t/2)|1>.
inline Vec bloch_vector(double theta, double phi) {
    Vec v(2);
    v << Cx(std::cos(theta / 2.0), 0.0), std::exp(Cx(0.0, phi)) * std::sin(theta / 2.0);
    return v;
}

/// <a b| w |a b> for the product of two Bloch kets.
inline double product_value(const Mat& w, double theta_a, double phi_a, double theta_b,
                            double phi_b) {
    const Vec ab = qlin::tensor(bloch_vector(theta_a, phi_a), bloch_vector(theta_b, phi_b));
    return (ab.adjoint() * w * ab).real()(0, 0);
}

struct ProductArgmin {
    double theta_a = 0.0, phi_a = 0.0, theta_b = 0.0, phi_b = 0.0;
};

struct PoptCertificate {
    bool popt = false;
    double min_product_value = 0.0;
    ProductArgmin argmin;
};

namespace detail {

inline Vec bloch_dtheta(double theta, double phi) {
    Vec v(2);
    v << Cx(-0.5 * std::sin(theta / 2.0), 0.0),
        std::exp(Cx(0.0, phi)) * 0.5 * std::cos(theta / 2.0);
    return v;
}

inline Vec bloch_dphi(double theta, double phi) {
    Vec v(2);
    v << Cx(0.0, 0.0), Cx(0.0, 1.0) * std::exp(Cx(0.0, phi)) * std::sin(theta / 2.0);
    return v;
}

inline Eigen::Vector4d product_gradient(const Mat& w, const Eigen::Vector4d& x) {
    const Vec a = bloch_vector(x(0), x(1));
    const Vec b = bloch_vector(x(2), x(3));
    const Vec ab = qlin::tensor(a, b);
    const Vec wab = w * ab;
    Eigen::Vector4d g;
    g(0) = 2.0 * (qlin::tensor(bloch_dtheta(x(0), x(1)), b).adjoint() * wab).real()(0, 0);
    g(1) = 2.0 * (qlin::tensor(bloch_dphi(x(0), x(1)), b).adjoint() * wab).real()(0, 0);
    g(2) = 2.0 * (qlin::tensor(a, bloch_dtheta(x(2), x(3))).adjoint() * wab).real()(0, 0);
    g(3) = 2.0 * (qlin::tensor(a, bloch_dphi(x(2), x(3))).adjoint() * wab).real()(0, 0);
    return g;
}

/// Backtracking gradient descent until the gradient norm drops to 1e-8.
inline void refine(const Mat& w, Eigen::Vector4d& x, double& fx) {
    const auto eval = [&w](const Eigen::Vector4d& p) {
        return product_value(w, p(0), p(1), p(2), p(3));
    };
    fx = eval(x);
    for (int iter = 0; iter < 2000; ++iter) {
        const Eigen::Vector4d g = product_gradient(w, x);
        const double gn2 = g.squaredNorm();
        if (std::sqrt(gn2) <= 1e-8) break;
        double step = 1.0;
        Eigen::Vector4d next = x - step * g;
        double fn = eval(next);
        while (fn > fx - 1e-4 * step * gn2 && step > 1e-20) {
            step /= 2.0;
            next = x - step * g;
            fn = eval(next);
        }
        if (step <= 1e-20) break;
        x = next;
        fx = fn;
    }
}

inline constexpr std::uint64_t kRestartSeed = 0x70726f64756374ULL;

}  // namespace detail

/// Minimizes the product-effect value of a unit-trace Hermitian operator
/// over all pure product kets: a 32^4 coarse grid, gradient refinement from
/// the best cell, and 20 seeded random restarts. POPT iff the minimum
/// clears `floor`.
inline PoptCertificate is_popt(const Mat& w, double floor = -1e-9) {
    if (w.rows() != 4 || w.cols() != 4 || !qlin::is_hermitian(w, 1e-10)) {
        throw std::invalid_argument("is_popt: expected a 4x4 Hermitian operator");
    }
    constexpr int kGrid = 32;
    struct SidePoint {
        Vec ket;
        double theta, phi;
        double p0, p1;  // |amp|^2
        Cx cross;       // conj(amp0) * amp1
    };
    std::vector<SidePoint> pts;
    pts.reserve(kGrid * kGrid);
    for (int t = 0; t < kGrid; ++t) {
        for (int p = 0; p < kGrid; ++p) {
            const double theta = (t + 0.5) * M_PI / kGrid;
            const double phi = p * 2.0 * M_PI / kGrid;
            const Vec v = bloch_vector(theta, phi);
            pts.push_back({v, theta, phi, std::norm(v(0)), std::norm(v(1)),
                           std::conj(v(0)) * v(1)});
        }
    }

    double best = std::numeric_limits<double>::infinity();
    Eigen::Vector4d best_x = Eigen::Vector4d::Zero();
    for (const auto& a : pts) {
        // Compress w against the A-side ket once: a 2x2 operator on B.
        Mat ma = Mat::Zero(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                ma += std::conj(a.ket(i)) * a.ket(k) * w.block<2, 2>(2 * i, 2 * k);
        const double m00 = ma(0, 0).real();
        const double m11 = ma(1, 1).real();
        const Cx m01 = ma(0, 1);
        for (const auto& b : pts) {
            const double f = m00 * b.p0 + m11 * b.p1 + 2.0 * (m01 * b.cross).real();
            if (f < best) {
                best = f;
                best_x << a.theta, a.phi, b.theta, b.phi;
            }
        }
    }

    Eigen::Vector4d x = best_x;
    double fx = best;
    detail::refine(w, x, fx);
    if (fx < best) {
        best = fx;
        best_x = x;
    }
    auto rng = random::seeded(detail::kRestartSeed);
    for (int r = 0; r < 20; ++r) {
        Eigen::Vector4d xr;
        xr << random::uniform(rng) * M_PI, random::uniform(rng) * 2.0 * M_PI,
            random::uniform(rng) * M_PI, random::uniform(rng) * 2.0 * M_PI;
        double fr = 0.0;
        detail::refine(w, xr, fr);
        if (fr < best) {
            best = fr;
            best_x = xr;
        }
    }

    PoptCertificate cert;
    cert.min_product_value = best;
    cert.argmin = {best_x(0), best_x(1), best_x(2), best_x(3)};
    cert.popt = best >= floor;
    return cert;
}

/// A unit-trace Hermitian operator certified positive on pure product
/// effects. May carry negative eigenvalues.
class PoptState {
  public:
    static PoptState certify(Mat m, double floor = -1e-9) {
        if (!qlin::is_hermitian(m, qlin::kHermTol)) {
            throw std::invalid_argument("PoptState: matrix is not Hermitian");
        }
        if (std::abs(m.trace().real() - 1.0) > qlin::kTraceTol) {
            throw std::invalid_argument("PoptState: trace is not 1");
        }
        PoptCertificate cert = is_popt(m, floor);
        if (!cert.popt) {
            throw std::invalid_argument("PoptState: operator is negative on a product effect");
        }
        return PoptState(std::move(m), cert);
    }

    const Mat& matrix() const { return mat_; }
    const PoptCertificate& certificate() const { return cert_; }

  private:
    PoptState(Mat m, PoptCertificate c) : mat_(std::move(m)), cert_(c) {}
    Mat mat_;
    PoptCertificate cert_;
};

/// The B-transposed singlet projector: unit trace, one eigenvalue -1/2,
/// positive on every product effect.
inline PoptState build_S() {
    const Mat s =
        qlin::partial_transpose(qlin::singlet().projector(), qlin::Subsystem::B);
    return PoptState::certify(s);
}

/// Family membership for POPT candidates: the diagonal blocks in the
/// family's measurement basis must match the uniform mixture and the
/// family off-diagonal stays inside the radius-1/2 disc.
inline bool generalized_membership(const families::PhaseFamily& f, const PoptState& w,
                                   double tol = 1e-9) {
    const Mat dephased = gates::dephase(gates::axis_measurement(f.axis), w.matrix(),
                                        gates::Side::A);
    if (qlin::trace_distance(dephased, families::family_centroid(f)) > tol) return false;
    const Cx off = f.first.vector().adjoint() * w.matrix() * f.second.vector();
    return std::abs(off) <= 0.5 + tol;
}

struct ScenarioConsistency {
    std::array<bool, 3> passes{};  // per canonical scenario, family order A1..A3
    std::array<families::CorrelationSignature, 3> signatures{};
    bool all_pass = false;
};

/// Evaluates a candidate against the pre-measurement constraints of all
/// three canonical scenarios and records its correlation signatures.
inline ScenarioConsistency scenario_consistency_report(const PoptState& w, double tol = 1e-9) {
    ScenarioConsistency out;
    out.all_pass = true;
    const std::array<qlin::Axis, 3> axes = {qlin::Axis::Z, qlin::Axis::X, qlin::Axis::Y};
    for (int i = 0; i < 3; ++i) {
        const auto constraint =
            timeorder::omega_constraint(timeorder::canonical_scenario(axes[i]));
        out.passes[i] = constraint.accepts(w.matrix(), tol);
        out.signatures[i] = families::correlation_signature(families::all_families()[i],
                                                            w.matrix());
        out.all_pass = out.all_pass && out.passes[i];
    }
    return out;
}

}  // namespace causalq::popt
