#pragma once

// Dense complex linear algebra for one- and two-qubit systems (dims 2 and 4).
//
// Composite basis order is A-major throughout the library: the product ket
// |i>_A |j>_B sits at index 2*i + j, so the two-qubit basis reads
// |00>, |01>, |10>, |11>.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace causalq::qlin {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Tolerances baked into the value types.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigFloor = -1e-10;

enum class Subsystem { A, B };
enum class Axis { X, Y, Z };

inline bool is_hermitian(const Mat& m, double tol = kHermTol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline void require_qubit_dim(Eigen::Index d, const char* what) {
    if (d != 2 && d != 4) {
        throw std::invalid_argument(std::string(what) +
                                    ": dimension must be 2 or 4, got " + std::to_string(d));
    }
}

/// A normalized pure state over the computational basis.
class Ket {
  public:
    explicit Ket(Vec amplitudes) : amps_(std::move(amplitudes)) {
        require_qubit_dim(amps_.size(), "Ket");
        if (std::abs(amps_.norm() - 1.0) > kNormTol) {
            throw std::invalid_argument("Ket: amplitudes are not normalized");
        }
    }
    Ket(std::initializer_list<Cx> amplitudes)
        : Ket(Eigen::Map<const Vec>(std::data(amplitudes),
                                    static_cast<Eigen::Index>(amplitudes.size()))) {}

    const Vec& vector() const { return amps_; }
    int dim() const { return static_cast<int>(amps_.size()); }
    Mat projector() const { return amps_ * amps_.adjoint(); }

  private:
    Vec amps_;
};

/// A unit-trace positive-semidefinite Hermitian operator (mixed state).
class DensityOperator {
  public:
    explicit DensityOperator(Mat m) : mat_(std::move(m)) {
        require_qubit_dim(mat_.rows(), "DensityOperator");
        if (!is_hermitian(mat_, kHermTol)) {
            throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
        }
        if (std::abs(mat_.trace().real() - 1.0) > kTraceTol ||
            std::abs(mat_.trace().imag()) > kTraceTol) {
            throw std::invalid_argument("DensityOperator: trace is not 1");
        }
        Eigen::SelfAdjointEigenSolver<Mat> es(mat_, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < kEigFloor) {
            throw std::invalid_argument("DensityOperator: matrix is not positive semidefinite");
        }
    }

    static DensityOperator from_ket(const Ket& psi) { return DensityOperator(psi.projector()); }

    const Mat& matrix() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

  private:
    Mat mat_;
};

// --- fixed states and operators ------------------------------------------

inline Ket ket0() { return Ket({Cx(1, 0), Cx(0, 0)}); }
inline Ket ket1() { return Ket({Cx(0, 0), Cx(1, 0)}); }
inline Ket ket_plus_x() { return Ket({Cx(M_SQRT1_2, 0), Cx(M_SQRT1_2, 0)}); }
inline Ket ket_minus_x() { return Ket({Cx(M_SQRT1_2, 0), Cx(-M_SQRT1_2, 0)}); }
inline Ket ket_plus_y() { return Ket({Cx(M_SQRT1_2, 0), Cx(0, M_SQRT1_2)}); }
inline Ket ket_minus_y() { return Ket({Cx(M_SQRT1_2, 0), Cx(0, -M_SQRT1_2)}); }

/// The singlet (|01> - |10>)/sqrt(2), anti-correlated along every axis.
inline Ket singlet() {
    return Ket({Cx(0, 0), Cx(M_SQRT1_2, 0), Cx(-M_SQRT1_2, 0), Cx(0, 0)});
}

inline Mat identity(int dim) { return Mat::Identity(dim, dim); }

inline Mat sigma_x() {
    Mat m(2, 2);
    m << Cx(0, 0), Cx(1, 0), Cx(1, 0), Cx(0, 0);
    return m;
}
inline Mat sigma_y() {
    Mat m(2, 2);
    m << Cx(0, 0), Cx(0, -1), Cx(0, 1), Cx(0, 0);
    return m;
}
inline Mat sigma_z() {
    Mat m(2, 2);
    m << Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(-1, 0);
    return m;
}

inline Mat pauli(Axis axis) {
    switch (axis) {
        case Axis::X: return sigma_x();
        case Axis::Y: return sigma_y();
        case Axis::Z: return sigma_z();
    }
    throw std::invalid_argument("pauli: invalid axis tag");
}

// --- operations -----------------------------------------------------------

/// Kronecker composition of two single-qubit operators, A factor major.
inline Mat tensor(const Mat& a, const Mat& b) {
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
        throw std::invalid_argument("tensor: operands must be 2x2 operators");
    }
    Mat out(4, 4);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index k = 0; k < 2; ++k) out.block<2, 2>(2 * i, 2 * k) = a(i, k) * b;
    return out;
}

inline Vec tensor(const Vec& a, const Vec& b) {
    if (a.size() != 2 || b.size() != 2) {
        throw std::invalid_argument("tensor: operands must be dimension-2 kets");
    }
    Vec out(4);
    out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return out;
}

inline Ket tensor(const Ket& a, const Ket& b) { return Ket(tensor(a.vector(), b.vector())); }

/// Traces out the named subsystem of a two-qubit operator and returns the
/// reduced operator of the remaining one.
inline Mat partial_trace(const Mat& rho, Subsystem traced_out) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw std::invalid_argument("partial_trace: expected a 4x4 operator");
    }
    Mat out = Mat::Zero(2, 2);
    if (traced_out == Subsystem::A) {
        for (Eigen::Index j = 0; j < 2; ++j)
            for (Eigen::Index l = 0; l < 2; ++l)
                out(j, l) = rho(0 * 2 + j, 0 * 2 + l) + rho(1 * 2 + j, 1 * 2 + l);
    } else {
        for (Eigen::Index i = 0; i < 2; ++i)
            for (Eigen::Index k = 0; k < 2; ++k)
                out(i, k) = rho(i * 2 + 0, k * 2 + 0) + rho(i * 2 + 1, k * 2 + 1);
    }
    return out;
}

inline DensityOperator partial_trace(const DensityOperator& rho, Subsystem traced_out) {
    return DensityOperator(partial_trace(rho.matrix(), traced_out));
}

/// Transposes the indicated tensor factor's indices. Hermiticity and trace
/// are preserved; positivity need not be.
inline Mat partial_transpose(const Mat& w, Subsystem factor) {
    if (w.rows() != 4 || w.cols() != 4) {
        throw std::invalid_argument("partial_transpose: expected a 4x4 operator");
    }
    if (!is_hermitian(w, 1e-10)) {
        throw std::invalid_argument("partial_transpose: input is not Hermitian");
    }
    Mat out(4, 4);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            for (Eigen::Index k = 0; k < 2; ++k)
                for (Eigen::Index l = 0; l < 2; ++l) {
                    if (factor == Subsystem::B) {
                        out(2 * i + j, 2 * k + l) = w(2 * i + l, 2 * k + j);
                    } else {
                        out(2 * i + j, 2 * k + l) = w(2 * k + j, 2 * i + l);
                    }
                }
    return out;
}

struct HermitianEigensystem {
    std::vector<double> values;  // ascending
    std::vector<Ket> vectors;    // orthonormal, paired with values
};

/// Full eigendecomposition of a Hermitian operator, eigenvalues ascending.
inline HermitianEigensystem eig_hermitian(const Mat& h) {
    if (!is_hermitian(h, kHermTol)) {
        throw std::invalid_argument("eig_hermitian: input is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    HermitianEigensystem out;
    for (Eigen::Index k = 0; k < h.rows(); ++k) {
        out.values.push_back(es.eigenvalues()(k));
        Vec v = es.eigenvectors().col(k);
        out.vectors.emplace_back(v / v.norm());
    }
    return out;
}

/// Half the absolute-eigenvalue sum of p - q. Defined for any Hermitian
/// pair so that hypothesized non-positive joint states compare too.
inline double trace_distance(const Mat& p, const Mat& q) {
    if (p.rows() != q.rows() || p.cols() != q.cols()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(p - q, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

inline double trace_distance(const DensityOperator& p, const DensityOperator& q) {
    return trace_distance(p.matrix(), q.matrix());
}

/// Tr(w sigma_i x sigma_j) for a unit-trace Hermitian two-qubit operator.
inline double pauli_correlation(const Mat& w, Axis i, Axis j) {
    if (w.rows() != 4 || w.cols() != 4) {
        throw std::invalid_argument("pauli_correlation: expected a 4x4 operator");
    }
    return (w * tensor(pauli(i), pauli(j))).trace().real();
}

inline double pauli_correlation(const DensityOperator& w, Axis i, Axis j) {
    return pauli_correlation(w.matrix(), i, j);
}

/// Marginal Bloch component Tr(w sigma_axis x I) or Tr(w I x sigma_axis).
inline double local_bloch(const Mat& w, Subsystem side, Axis axis) {
    const Mat obs = side == Subsystem::A ? tensor(pauli(axis), identity(2))
                                         : tensor(identity(2), pauli(axis));
    return (w * obs).trace().real();
}

/// Hilbert-Schmidt-orthonormal Hermitian basis of the two-qubit operator
/// space: (sigma_i x sigma_j)/2 with sigma_0 = I, row-major in (i, j).
inline const std::vector<Mat>& hermitian_basis4() {
    static const std::vector<Mat> basis = [] {
        const Mat s[4] = {identity(2), sigma_x(), sigma_y(), sigma_z()};
        std::vector<Mat> out;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out.push_back(tensor(s[i], s[j]) / 2.0);
        return out;
    }();
    return basis;
}

/// Real coefficient vector of a Hermitian two-qubit operator in
/// hermitian_basis4 order; w = sum_m c_m B_m.
inline Eigen::VectorXd pauli_coefficients(const Mat& w) {
    const auto& basis = hermitian_basis4();
    Eigen::VectorXd c(16);
    for (int m = 0; m < 16; ++m) c(m) = (w * basis[m]).trace().real();
    return c;
}

inline Mat from_pauli_coefficients(const Eigen::VectorXd& c) {
    const auto& basis = hermitian_basis4();
    Mat w = Mat::Zero(4, 4);
    for (int m = 0; m < 16; ++m) w += c(m) * basis[m];
    return w;
}

/// State equality is trace distance below tolerance; for kets this quotients
/// out the global phase.
inline bool same_state(const Mat& p, const Mat& q, double tol = 1e-9) {
    return trace_distance(p, q) <= tol;
}

inline bool same_state(const Ket& a, const Ket& b, double tol = 1e-9) {
    return same_state(a.projector(), b.projector(), tol);
}

}  // namespace causalq::qlin
