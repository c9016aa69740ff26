#include <catch2/catch_amalgamated.hpp>

#include "causalq/qlin.hpp"
#include "causalq/random.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace causalq;
using namespace causalq::qlin;
using test_helpers::mat_close;
using test_helpers::vec_close;

TEST_CASE("ket and density operator invariants", "[qlin]") {
    CHECK_THROWS_AS(Ket({Cx(1, 0), Cx(1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(Ket(Vec::Ones(3) / std::sqrt(3.0)), std::invalid_argument);

    Mat not_hermitian(2, 2);
    not_hermitian << Cx(0.5, 0), Cx(0.5, 0), Cx(0, 0), Cx(0.5, 0);
    CHECK_THROWS_AS(DensityOperator(not_hermitian), std::invalid_argument);

    Mat wrong_trace = Mat::Identity(2, 2);
    CHECK_THROWS_AS(DensityOperator(wrong_trace), std::invalid_argument);

    Mat negative(2, 2);
    negative << Cx(1.5, 0), Cx(0, 0), Cx(0, 0), Cx(-0.5, 0);
    CHECK_THROWS_AS(DensityOperator(negative), std::invalid_argument);
}

TEST_CASE("tensor composition", "[qlin]") {
    SECTION("|0> x |1> = |01>") {
        const Ket k = tensor(ket0(), ket1());
        Vec want(4);
        want << Cx(0, 0), Cx(1, 0), Cx(0, 0), Cx(0, 0);
        CHECK(vec_close(k.vector(), want));
    }
    SECTION("I x I = I4") { CHECK(mat_close(tensor(identity(2), identity(2)), identity(4))); }
    SECTION("singlet amplitudes") {
        Vec want(4);
        want << Cx(0, 0), Cx(M_SQRT1_2, 0), Cx(-M_SQRT1_2, 0), Cx(0, 0);
        CHECK(vec_close(singlet().vector(), want));
        const Vec built = (tensor(ket0(), ket1()).vector() - tensor(ket1(), ket0()).vector()) /
                          M_SQRT2;
        CHECK(vec_close(singlet().vector(), built));
    }
    SECTION("bilinearity on random operators") {
        auto rng = random::seeded(11);
        for (int i = 0; i < 50; ++i) {
            const Mat a = random::ginibre(2, 2, rng);
            const Mat b = random::ginibre(2, 2, rng);
            const Cx alpha = random::complex_normal(rng);
            CHECK(mat_close(tensor(Mat(alpha * a), b), Mat(alpha * tensor(a, b)), 1e-10));
        }
    }
    SECTION("dimension checks") {
        CHECK_THROWS_AS(tensor(identity(4), identity(2)), std::invalid_argument);
    }
}

TEST_CASE("partial trace", "[qlin]") {
    SECTION("maximally entangled marginal is maximally mixed") {
        CHECK(mat_close(partial_trace(singlet().projector(), Subsystem::A),
                        Mat(identity(2) / 2.0)));
        CHECK(mat_close(partial_trace(singlet().projector(), Subsystem::B),
                        Mat(identity(2) / 2.0)));
    }
    SECTION("product case") {
        const Mat rho = tensor(ket0(), ket1()).projector();
        CHECK(mat_close(partial_trace(rho, Subsystem::B), ket0().projector()));
        CHECK(mat_close(partial_trace(rho, Subsystem::A), ket1().projector()));
    }
    SECTION("classically correlated mixture against direct index summation") {
        const Mat rho = 0.5 * tensor(ket0(), ket1()).projector() +
                        0.5 * tensor(ket1(), ket0()).projector();
        // Independent oracle: contract the A indices by explicit loops.
        Mat byhand = Mat::Zero(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l) byhand(j, l) += rho(2 * i + j, 2 * i + l);
        CHECK(mat_close(byhand, Mat(identity(2) / 2.0)));
        CHECK(mat_close(partial_trace(rho, Subsystem::A), byhand));
    }
    SECTION("product states reduce exactly") {
        auto rng = random::seeded(12);
        for (int i = 0; i < 100; ++i) {
            const Mat a = random::random_density(2, rng).matrix();
            const Mat b = random::random_density(2, rng).matrix();
            CHECK(mat_close(partial_trace(tensor(a, b), Subsystem::A), b, 1e-12));
            CHECK(mat_close(partial_trace(tensor(a, b), Subsystem::B), a, 1e-12));
        }
    }
}

TEST_CASE("partial transpose", "[qlin]") {
    SECTION("identity invariant") {
        CHECK(mat_close(partial_transpose(Mat(identity(4) / 4.0), Subsystem::B),
                        Mat(identity(4) / 4.0)));
    }
    SECTION("computational-basis-diagonal invariant") {
        const Mat rho = tensor(ket0(), ket1()).projector();
        CHECK(mat_close(partial_transpose(rho, Subsystem::B), rho));
    }
    SECTION("transposed singlet spectrum from the characteristic polynomial") {
        const Mat s = partial_transpose(singlet().projector(), Subsystem::B);
        const auto roots = oracles::charpoly_eigenvalues(s);
        REQUIRE(roots.size() == 4);
        CHECK(roots[0] == Catch::Approx(-0.5).margin(1e-10));
        CHECK(roots[1] == Catch::Approx(0.5).margin(1e-10));
        CHECK(roots[3] == Catch::Approx(0.5).margin(1e-10));
    }
    SECTION("involution restores the input") {
        auto rng = random::seeded(13);
        for (int i = 0; i < 100; ++i) {
            const Mat w = random::random_density(4, rng).matrix();
            const Mat twice =
                partial_transpose(partial_transpose(w, Subsystem::B), Subsystem::B);
            CHECK((twice - w).cwiseAbs().maxCoeff() <= 1e-14);
        }
    }
    SECTION("non-Hermitian input is rejected") {
        Mat bad = Mat::Zero(4, 4);
        bad(0, 1) = Cx(1, 0);
        CHECK_THROWS_AS(partial_transpose(bad, Subsystem::B), std::invalid_argument);
    }
}

TEST_CASE("hermitian eigendecomposition", "[qlin]") {
    SECTION("pauli z") {
        const auto es = eig_hermitian(sigma_z());
        CHECK(es.values[0] == Catch::Approx(-1.0).margin(1e-12));
        CHECK(es.values[1] == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("maximally mixed qubit") {
        const auto es = eig_hermitian(Mat(identity(2) / 2.0));
        CHECK(es.values[0] == Catch::Approx(0.5).margin(1e-12));
        CHECK(es.values[1] == Catch::Approx(0.5).margin(1e-12));
    }
    SECTION("agrees with the characteristic-polynomial roots") {
        auto rng = random::seeded(14);
        for (int i = 0; i < 25; ++i) {
            const Mat h = random::random_density(4, rng).matrix();
            const auto es = eig_hermitian(h);
            const auto roots = oracles::charpoly_eigenvalues(h);
            for (int k = 0; k < 4; ++k) {
                CHECK(es.values[static_cast<size_t>(k)] ==
                      Catch::Approx(roots[static_cast<size_t>(k)]).margin(1e-9));
            }
        }
    }
    SECTION("reconstruction and orthonormality") {
        auto rng = random::seeded(15);
        for (int i = 0; i < 50; ++i) {
            const Mat h = random::random_density(4, rng).matrix();
            const auto es = eig_hermitian(h);
            Mat rebuilt = Mat::Zero(4, 4);
            for (size_t k = 0; k < es.values.size(); ++k) {
                rebuilt += es.values[k] * es.vectors[k].projector();
            }
            CHECK(mat_close(rebuilt, h, 1e-10));
            for (size_t p = 0; p < 4; ++p)
                for (size_t q = p + 1; q < 4; ++q) {
                    const Cx ip = es.vectors[p].vector().adjoint() * es.vectors[q].vector();
                    CHECK(std::abs(ip) <= 1e-10);
                }
        }
    }
    SECTION("non-Hermitian input is rejected") {
        Mat bad = Mat::Zero(2, 2);
        bad(0, 1) = Cx(0, 1);
        bad(1, 0) = Cx(0, 1);
        CHECK_THROWS_AS(eig_hermitian(bad), std::invalid_argument);
    }
}

TEST_CASE("trace distance", "[qlin]") {
    SECTION("coincident states") {
        CHECK(trace_distance(ket0().projector(), ket0().projector()) == 0.0);
    }
    SECTION("orthogonal pure states") {
        CHECK(trace_distance(ket0().projector(), ket1().projector()) ==
              Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("pure versus maximally mixed") {
        CHECK(trace_distance(ket0().projector(), Mat(identity(2) / 2.0)) ==
              Catch::Approx(0.5).margin(1e-12));
    }
    SECTION("triangle inequality on random triples") {
        auto rng = random::seeded(16);
        for (int i = 0; i < 200; ++i) {
            const Mat p = random::random_density(4, rng).matrix();
            const Mat q = random::random_density(4, rng).matrix();
            const Mat r = random::random_density(4, rng).matrix();
            CHECK(trace_distance(p, q) <=
                  trace_distance(p, r) + trace_distance(r, q) + 1e-10);
            CHECK(trace_distance(p, q) == Catch::Approx(trace_distance(q, p)).margin(1e-12));
        }
    }
    SECTION("dimension mismatch") {
        CHECK_THROWS_AS(trace_distance(identity(2), identity(4)), std::invalid_argument);
    }
}

TEST_CASE("pauli correlation", "[qlin]") {
    const Mat s = singlet().projector();
    SECTION("singlet is z-anti-correlated") {
        CHECK(pauli_correlation(s, Axis::Z, Axis::Z) == Catch::Approx(-1.0).margin(1e-12));
        CHECK(pauli_correlation(s, Axis::X, Axis::X) == Catch::Approx(-1.0).margin(1e-12));
        CHECK(pauli_correlation(s, Axis::Y, Axis::Y) == Catch::Approx(-1.0).margin(1e-12));
    }
    SECTION("maximally mixed is uncorrelated") {
        CHECK(pauli_correlation(Mat(identity(4) / 4.0), Axis::Z, Axis::Z) ==
              Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("transposed singlet flips the y correlation") {
        const Mat st = partial_transpose(s, Subsystem::B);
        CHECK(pauli_correlation(st, Axis::Y, Axis::Y) == Catch::Approx(1.0).margin(1e-12));
        CHECK(pauli_correlation(st, Axis::Z, Axis::Z) == Catch::Approx(-1.0).margin(1e-12));
        CHECK(pauli_correlation(st, Axis::X, Axis::X) == Catch::Approx(-1.0).margin(1e-12));
    }
}

TEST_CASE("pauli coefficient round trip", "[qlin]") {
    auto rng = random::seeded(17);
    for (int i = 0; i < 50; ++i) {
        const Mat w = random::random_density(4, rng).matrix();
        CHECK(mat_close(from_pauli_coefficients(pauli_coefficients(w)), w, 1e-12));
    }
}
