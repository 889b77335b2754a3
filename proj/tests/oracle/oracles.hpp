#pragma once

// Test-only reference computations. None of these call into the library's
// eigensolvers or measure implementations; they exist to check them.

#include <array>
#include <complex>
#include <random>
#include <vector>

#include "monogamy/tensor.hpp"

namespace monogamy::oracle {

/// Eigenvalues of a general (non-Hermitian) complex matrix by shifted QR
/// iteration with Givens rotations. Unordered.
std::vector<Complex> general_eigenvalues(const CMatrix& m);

/// Wootters lambdas straight from the definition: square roots of the
/// eigenvalues of rho * (Y Y) rho^* (Y Y), descending. Vanishing lambdas are
/// only accurate to ~sqrt(machine eps).
std::array<double, 4> wootters_lambdas(const CMatrix& rho);
double wootters_concurrence(const CMatrix& rho);

/// Partial trace of |psi><psi| (8x8 built explicitly) keeping the listed
/// qubits; index digits are taken in the order given.
CMatrix partial_trace_explicit(const std::array<Complex, 8>& psi, std::vector<int> keep);

/// Three-tangle from the Cayley hyperdeterminant, 4 |d1 - 2 d2 + 4 d3|.
double hyperdeterminant_tangle(const std::array<Complex, 8>& a);

/// Haar-random vector of length n via std::normal_distribution.
std::vector<Complex> haar_vector(std::size_t n, std::mt19937_64& gen);

/// Random n x n unitary as a product of complex Givens rotations and phases.
CMatrix random_unitary(std::size_t n, std::mt19937_64& gen);

/// Apply a 2x2 unitary to one qubit of a 3-qubit vector.
std::array<Complex, 8> apply_local(const std::array<Complex, 8>& psi, const CMatrix& u, int qubit);

}  // namespace monogamy::oracle
