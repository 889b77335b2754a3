#include "monogamy/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monogamy/error.hpp"

namespace monogamy {

namespace {

void require_dim(const CMatrix& m, std::size_t dim, const char* op) {
    if (m.dim() != dim) {
        throw DimensionError(std::string(op) + " expects a " + std::to_string(dim) + "x" +
                             std::to_string(dim) + " matrix");
    }
}

void require_unit_trace(const CMatrix& rho) {
    const Complex t = trace(rho);
    if (std::abs(t - 1.0) > 1e-8) {
        throw ValidationError("density matrix must have unit trace (got " +
                              std::to_string(t.real()) + ")");
    }
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

CMatrix spin_flip_qubit(const CMatrix& rho) {
    require_dim(rho, 2, "spin_flip_qubit");
    const CMatrix y = pauli::y();
    return y * conjugate(rho) * y;
}

CMatrix spin_flip_two_qubit(const CMatrix& rho) {
    require_dim(rho, 4, "spin_flip_two_qubit");
    const CMatrix yy = pauli::yy();
    return yy * conjugate(rho) * yy;
}

LambdaSpectrum lambda_spectrum(const CMatrix& rho) {
    require_dim(rho, 4, "lambda_spectrum");
    require_unit_trace(rho);
    const HermitianEigen eig = hermitian_eigen(rho);
    if (eig.values.back() < -kPsdTolerance) {
        throw ValidationError("density matrix is not positive semidefinite (eigenvalue " +
                              std::to_string(eig.values.back()) + ")");
    }

    // T = sqrt(mu) E^T Y E sqrt(mu), Y = sigma_y x sigma_y.
    const CMatrix& e = eig.vectors;
    const CMatrix core = transpose(e) * pauli::yy() * e;
    std::array<double, 4> root_mu{};
    for (std::size_t k = 0; k < 4; ++k) {
        const double mu = eig.values[k];
        root_mu[k] = mu > kRankFloor ? std::sqrt(mu) : 0.0;
    }
    CMatrix t(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) t(i, j) = root_mu[i] * core(i, j) * root_mu[j];

    const std::vector<double> sv = singular_values(t);
    LambdaSpectrum out;
    std::copy(sv.begin(), sv.end(), out.values.begin());
    return out;
}

double concurrence_from_lambdas(const LambdaSpectrum& l) {
    return clamp_unit(l[0] - l[1] - l[2] - l[3]);
}

double concurrence_mixed(const CMatrix& rho) { return concurrence_from_lambdas(lambda_spectrum(rho)); }

namespace {

void require_normalized(std::span<const Complex, 4> psi) {
    double n = 0.0;
    for (const auto& a : psi) n += std::norm(a);
    if (std::abs(n - 1.0) > 1e-10) throw ValidationError("two-qubit state is not normalized");
}

}  // namespace

double concurrence_pure_2q(std::span<const Complex, 4> psi) {
    require_normalized(psi);
    // psi^T (sigma_y x sigma_y) psi = 2 (psi01 psi10 - psi00 psi11)
    return clamp_unit(2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]));
}

double concurrence_pure_2q_det(std::span<const Complex, 4> psi) {
    require_normalized(psi);
    const CMatrix rho_a = trace_out_two_qubit(CMatrix::outer(psi), true);
    const double det = (rho_a(0, 0) * rho_a(1, 1) - rho_a(0, 1) * rho_a(1, 0)).real();
    return clamp_unit(2.0 * std::sqrt(std::max(det, 0.0)));
}

double concurrence_sq_bipartition_raw(const PureState3Q& psi, Qubit pivot) {
    const CMatrix rho = psi.reduced(pivot);
    const double purity = trace(rho * rho).real();
    return 2.0 * (1.0 - purity);
}

double concurrence_bipartition(const PureState3Q& psi, Qubit pivot) {
    return std::sqrt(clamp_unit(concurrence_sq_bipartition_raw(psi, pivot)));
}

double concurrence_sq_pair(const PureState3Q& psi, QubitPair pair) {
    const double c = concurrence_mixed(psi.reduced(pair));
    return c * c;
}

std::array<QubitPair, 2> pivot_pairs(Qubit pivot) {
    switch (pivot) {
        case Qubit::A: return {QubitPair{Qubit::A, Qubit::B}, QubitPair{Qubit::A, Qubit::C}};
        case Qubit::B: return {QubitPair{Qubit::B, Qubit::A}, QubitPair{Qubit::B, Qubit::C}};
        case Qubit::C: return {QubitPair{Qubit::C, Qubit::A}, QubitPair{Qubit::C, Qubit::B}};
    }
    throw ValidationError("invalid pivot");
}

TangleValue residual_tangle(const PureState3Q& psi, Qubit pivot) {
    const auto pairs = pivot_pairs(pivot);
    const double raw = concurrence_sq_bipartition_raw(psi, pivot) -
                       concurrence_sq_pair(psi, pairs[0]) - concurrence_sq_pair(psi, pairs[1]);
    return {clamp_unit(raw), raw};
}

TangleValue residual_tangle_lambda(const PureState3Q& psi, QubitPair pair) {
    const LambdaSpectrum l = lambda_spectrum(psi.reduced(pair));
    const double raw = 4.0 * l[0] * l[1];
    return {clamp_unit(raw), raw};
}

double trace_rho_rhotilde(const CMatrix& rho) {
    require_dim(rho, 4, "trace_rho_rhotilde");
    return std::max(trace(rho * spin_flip_two_qubit(rho)).real(), 0.0);
}

}  // namespace monogamy
