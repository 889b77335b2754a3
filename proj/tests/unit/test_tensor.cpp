#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "monogamy/error.hpp"
#include "monogamy/states.hpp"
#include "monogamy/tensor.hpp"
#include "oracles.hpp"

using namespace monogamy;

namespace {

void expect_matrix_near(const CMatrix& a, const CMatrix& b, double tol) {
    ASSERT_EQ(a.dim(), b.dim());
    EXPECT_LE(max_abs_diff(a, b), tol);
}

Amplitudes to_amps(const std::vector<Complex>& v) {
    Amplitudes a{};
    std::copy(v.begin(), v.end(), a.begin());
    return a;
}

}  // namespace

TEST(Matmul, IdentityAndPauliInvolutions) {
    std::mt19937_64 gen(3);
    const CMatrix m = oracle::random_unitary(4, gen);
    expect_matrix_near(CMatrix::identity(4) * m, m, 0.0);
    expect_matrix_near(pauli::y() * pauli::y(), CMatrix::identity(2), 0.0);
    expect_matrix_near(pauli::yy() * pauli::yy(), CMatrix::identity(4), 0.0);
}

TEST(Matmul, DimensionMismatchThrows) {
    EXPECT_THROW(matmul(CMatrix::identity(2), CMatrix::identity(4)), DimensionError);
    EXPECT_THROW(CMatrix(3), DimensionError);
    EXPECT_THROW(CMatrix(2, {1.0, 2.0, 3.0}), DimensionError);
}

TEST(ConjugateAdjointTrace, Basics) {
    const CMatrix real(2, {1.0, 2.0, 3.0, 4.0});
    expect_matrix_near(conjugate(real), real, 0.0);
    EXPECT_EQ(trace(CMatrix::identity(4)), Complex(4.0, 0.0));
    const CMatrix y = pauli::y();
    expect_matrix_near(adjoint(y), y, 0.0);
    const CMatrix c(2, {Complex{1, 2}, Complex{3, 4}, Complex{5, 6}, Complex{7, 8}});
    EXPECT_EQ(adjoint(c)(0, 1), Complex(5, -6));
    EXPECT_EQ(conjugate(c)(0, 1), Complex(3, -4));
}

TEST(PartialTrace, GhzPairIsClassicallyCorrelated) {
    const PureState3Q ghz = make_ghz();
    CMatrix expected(4);
    expected(0, 0) = 0.5;
    expected(3, 3) = 0.5;
    expect_matrix_near(ghz.reduced(QubitPair{Qubit::A, Qubit::B}), expected, 1e-15);
    expect_matrix_near(ghz.reduced(Qubit::A), CMatrix::identity(2) * 0.5, 1e-15);
}

TEST(PartialTrace, ProductState) {
    Amplitudes a{};
    a[0] = 1.0;
    const PureState3Q psi = PureState3Q::validate(a);
    CMatrix expected(4);
    expected(0, 0) = 1.0;
    expect_matrix_near(psi.reduced(QubitPair{Qubit::A, Qubit::B}), expected, 0.0);
    CMatrix single(2);
    single(0, 0) = 1.0;
    expect_matrix_near(psi.reduced(Qubit::A), single, 0.0);
}

TEST(PartialTrace, BellProductMarginalMatchesMixture) {
    for (double p1 : {0.2, 2.0 / 3.0, 0.9}) {
        const double p2 = 1.0 - p1;
        const std::array<Complex, 4> singlet{0.0, std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2, 0.0};
        CMatrix expected = CMatrix::outer(singlet) * p1;
        expected(0, 0) += p2;
        expect_matrix_near(make_bell_product(p1).reduced(QubitPair{Qubit::A, Qubit::B}), expected, 1e-15);
    }
}

TEST(PartialTrace, CanonicalAMarginalOfA) {
    const std::array<double, 5> p{0.3, 0.4, 0.5, 0.2, std::sqrt(1 - 0.09 - 0.16 - 0.25 - 0.04)};
    const double theta = 0.7;
    const CMatrix rho = make_canonical_a(p, theta).reduced(Qubit::A);
    const CMatrix expected(2, {p[0] * p[0] + p[1] * p[1], p[0] * p[2] * std::polar(1.0, theta),
                               p[0] * p[2] * std::polar(1.0, -theta),
                               p[2] * p[2] + p[3] * p[3] + p[4] * p[4]});
    expect_matrix_near(rho, expected, 1e-15);
}

TEST(PartialTrace, MatchesExplicitOracleForAllPairs) {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto amps = to_amps(oracle::haar_vector(8, gen));
        const PureState3Q psi = PureState3Q::validate(amps);
        for (auto [f, s] : {std::pair{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}}) {
            const CMatrix lib = psi.reduced(QubitPair{static_cast<Qubit>(f), static_cast<Qubit>(s)});
            expect_matrix_near(lib, oracle::partial_trace_explicit(amps, {f, s}), 1e-15);
        }
        for (int q = 0; q < 3; ++q)
            expect_matrix_near(psi.reduced(static_cast<Qubit>(q)), oracle::partial_trace_explicit(amps, {q}),
                               1e-15);
    }
}

TEST(PartialTrace, RandomMarginalsAreDensityMatrices) {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 200; ++trial) {
        const PureState3Q psi = PureState3Q::validate(to_amps(oracle::haar_vector(8, gen)));
        const CMatrix ab = psi.reduced(QubitPair{Qubit::A, Qubit::B});
        EXPECT_LE(hermiticity_defect(ab), 1e-13);
        EXPECT_NEAR(std::abs(trace(ab) - 1.0), 0.0, 1e-13);
        EXPECT_GE(hermitian_eigenvalues(ab).back(), -1e-12);
        expect_matrix_near(trace_out_two_qubit(ab, true), psi.reduced(Qubit::A), 1e-13);
        expect_matrix_near(trace_out_two_qubit(ab, false), psi.reduced(Qubit::B), 1e-13);
        for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) {
            const CMatrix r = psi.reduced(q);
            const double purity = trace(r * r).real();
            EXPECT_GE(purity, 0.5 - 1e-12);
            EXPECT_LE(purity, 1.0 + 1e-12);
        }
    }
}

TEST(HermitianEigen, SmallExamples) {
    EXPECT_EQ(hermitian_eigenvalues(CMatrix::identity(4)), (std::vector<double>{1, 1, 1, 1}));
    const std::array<double, 4> d{3, 1, 4, 1};
    const auto ev = hermitian_eigenvalues(CMatrix::diagonal(d));
    EXPECT_EQ(ev, (std::vector<double>{4, 3, 1, 1}));
    const auto ey = hermitian_eigenvalues(pauli::y());
    EXPECT_NEAR(ey[0], 1.0, 1e-15);
    EXPECT_NEAR(ey[1], -1.0, 1e-15);
}

TEST(HermitianEigen, RejectsNonHermitian) {
    const CMatrix m(2, {1.0, 2.0, 0.0, 1.0});
    EXPECT_THROW(hermitian_eigenvalues(m), ValidationError);
}

TEST(HermitianEigen, RecoversConjugatedDiagonal) {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (std::size_t n : {2U, 4U, 8U}) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> d(n);
            for (auto& x : d) x = dist(gen);
            const CMatrix u = oracle::random_unitary(n, gen);
            const CMatrix m = u * CMatrix::diagonal(d) * adjoint(u);
            const HermitianEigen eig = hermitian_eigen(m);
            std::sort(d.begin(), d.end(), std::greater<>());
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                EXPECT_NEAR(eig.values[k], d[k], 1e-11);
                sum += eig.values[k];
            }
            EXPECT_NEAR(sum, trace(m).real(), 1e-12);
            // Eigenvectors reconstruct the matrix.
            const CMatrix back = eig.vectors * CMatrix::diagonal(eig.values) * adjoint(eig.vectors);
            EXPECT_LE(max_abs_diff(back, m), 1e-12);
        }
    }
}

TEST(SingularValues, MatchOracleOnRandomMatrices) {
    std::mt19937_64 gen(23);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 50; ++trial) {
        CMatrix m(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = Complex{normal(gen), normal(gen)};
        const auto sv = singular_values(m);
        auto ev = oracle::general_eigenvalues(adjoint(m) * m);
        std::vector<double> expected;
        for (auto z : ev) expected.push_back(std::sqrt(std::max(z.real(), 0.0)));
        std::sort(expected.begin(), expected.end(), std::greater<>());
        for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(sv[k], expected[k], 1e-9);
    }
}

TEST(SingularValues, RankDeficientKeepsExactZeros) {
    std::mt19937_64 gen(29);
    const auto v = oracle::haar_vector(4, gen);
    const auto sv = singular_values(CMatrix::outer(v));
    EXPECT_NEAR(sv[0], 1.0, 1e-15);
    for (std::size_t k = 1; k < 4; ++k) EXPECT_LE(sv[k], 1e-15);
}

TEST(QubitLabels, ComplementAndParsing) {
    EXPECT_EQ(complement({Qubit::A, Qubit::B}), Qubit::C);
    EXPECT_EQ(complement({Qubit::C, Qubit::A}), Qubit::B);
    EXPECT_THROW(complement({Qubit::A, Qubit::A}), ValidationError);
    EXPECT_EQ(qubit_from_char('b'), Qubit::B);
    EXPECT_THROW(qubit_from_char('D'), ValidationError);
    EXPECT_EQ(bit_weight(Qubit::A), 4U);
    EXPECT_EQ(bit_weight(Qubit::C), 1U);
}
