#pragma once

// Seeded random generators for property sweeps. Distribution sampling is
// hand-rolled on top of the raw mt19937_64 stream so that identical seeds
// give identical values on every platform and standard library.

#include "causalq/gates.hpp"
#include "causalq/qlin.hpp"

#include <cstdint>
#include <random>

namespace causalq::random {

using qlin::Cx;
using qlin::DensityOperator;
using qlin::Ket;
using qlin::Mat;
using qlin::Vec;

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent per-instance stream for sweep index `stream` under `seed`.
inline Rng seeded(std::uint64_t seed, std::uint64_t stream = 0) {
    return Rng(splitmix64(seed ^ splitmix64(stream)));
}

inline double uniform(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double normal(Rng& rng) {
    // Box-Muller; discards the second variate for simplicity.
    double u1 = uniform(rng);
    while (u1 <= 0.0) u1 = uniform(rng);
    const double u2 = uniform(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline Cx complex_normal(Rng& rng) {
    const double re = normal(rng);
    const double im = normal(rng);
    return Cx(re, im);
}

inline Mat ginibre(int rows, int cols, Rng& rng) {
    Mat g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = complex_normal(rng);
    return g;
}

inline Ket random_ket(int dim, Rng& rng) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = complex_normal(rng);
    return Ket(v / v.norm());
}

/// Haar-distributed unitary via QR of a Ginibre matrix with phase fixing.
inline Mat random_unitary(int dim, Rng& rng) {
    const Mat g = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const Cx d = r(i, i);
        q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : Cx(1, 0);
    }
    return q;
}

/// Random mixed state; rank 0 means full rank.
inline DensityOperator random_density(int dim, Rng& rng, int rank = 0) {
    const int k = rank <= 0 ? dim : rank;
    const Mat g = ginibre(dim, k, rng);
    Mat rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Symmetrize away the last bits of round-off.
    rho = (rho + rho.adjoint().eval()) / 2.0;
    return DensityOperator(rho);
}

/// Random trace-preserving channel with `n_elements` Kraus operators,
/// obtained by slicing a Haar isometry.
inline std::vector<Mat> random_kraus(int dim, int n_elements, Rng& rng) {
    const Mat u = random_unitary(dim * n_elements, rng);
    std::vector<Mat> elements;
    for (int k = 0; k < n_elements; ++k) {
        elements.push_back(u.block(k * dim, 0, dim, dim));
    }
    return elements;
}

inline gates::ProjectiveMeasurement random_basis(int dim, Rng& rng) {
    const Mat u = random_unitary(dim, rng);
    gates::ProjectiveMeasurement m;
    for (int k = 0; k < dim; ++k) m.basis.emplace_back(Vec(u.col(k)));
    return m;
}

/// Random anti-unitary gate (Haar unitary dressing the conjugation).
inline gates::GateSpec random_antiunitary(Rng& rng) {
    return gates::GateSpec(gates::AntiUnitary{random_unitary(2, rng)});
}

}  // namespace causalq::random
