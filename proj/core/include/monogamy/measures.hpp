#pragma once

#include <array>
#include <span>

#include "monogamy/states.hpp"
#include "monogamy/tensor.hpp"

namespace monogamy {

/// Square roots of the eigenvalues of rho * rho_tilde, descending, all >= 0.
struct LambdaSpectrum {
    std::array<double, 4> values{};

    double operator[](std::size_t i) const { return values[i]; }
};

/// Residual tangle. `tau` is clamped to [0, 1]; `raw` is the unclamped value.
struct TangleValue {
    double tau = 0.0;
    double raw = 0.0;
};

/// Eigenvalues of rho below this (after the PSD check) count as exact zeros.
inline constexpr double kRankFloor = 1e-14;
/// Most negative eigenvalue a density matrix may have before it is rejected.
inline constexpr double kPsdTolerance = 1e-10;

/// sigma_y rho^* sigma_y. Negates the Bloch vector.
CMatrix spin_flip_qubit(const CMatrix& rho);
/// (sigma_y x sigma_y) rho^* (sigma_y x sigma_y).
CMatrix spin_flip_two_qubit(const CMatrix& rho);

/// Wootters lambda spectrum of a two-qubit density matrix.
///
/// With rho = E diag(mu) E^dagger, the matrix T = sqrt(mu) E^T (sigma_y x
/// sigma_y) E sqrt(mu) satisfies T^dagger T ~ sqrt(rho) rho_tilde sqrt(rho),
/// so its singular values are the lambdas. Taking singular values directly
/// keeps vanishing lambdas at round-off level instead of its square root.
/// Throws ValidationError for non-Hermitian, non-PSD or non-unit-trace input.
LambdaSpectrum lambda_spectrum(const CMatrix& rho);

/// max(lambda1 - lambda2 - lambda3 - lambda4, 0), capped at 1.
double concurrence_mixed(const CMatrix& rho);
double concurrence_from_lambdas(const LambdaSpectrum& lambdas);

/// |<psi| sigma_y x sigma_y |psi^*>| for a normalized two-qubit pure state.
double concurrence_pure_2q(std::span<const Complex, 4> psi);
/// 2 sqrt(det rho_A) for the same state; agrees with concurrence_pure_2q.
double concurrence_pure_2q_det(std::span<const Complex, 4> psi);

/// 2 (1 - Tr rho_pivot^2) before clamping to [0, 1].
double concurrence_sq_bipartition_raw(const PureState3Q& psi, Qubit pivot);
/// C_{pivot(rest)} = sqrt(2 (1 - Tr rho_pivot^2)).
double concurrence_bipartition(const PureState3Q& psi, Qubit pivot);

/// Squared Wootters concurrence of the two-qubit marginal `pair`.
double concurrence_sq_pair(const PureState3Q& psi, QubitPair pair);

/// The two pairs containing `pivot`, in (pivot, other) order; for pivot A
/// that is (A,B), (A,C).
std::array<QubitPair, 2> pivot_pairs(Qubit pivot);

/// tau = C^2_{pivot(rest)} - C^2_{pivot,x} - C^2_{pivot,y}.
TangleValue residual_tangle(const PureState3Q& psi, Qubit pivot);
/// tau = 4 lambda1 lambda2 of the marginal `pair`.
TangleValue residual_tangle_lambda(const PureState3Q& psi, QubitPair pair);

/// Tr(rho * rho_tilde), real and non-negative.
double trace_rho_rhotilde(const CMatrix& rho);

}  // namespace monogamy
