#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace monogamy {

using Complex = std::complex<double>;

/// Qubit labels of a three-qubit register. A is the most significant bit of
/// the basis index, so |abc> sits at index 4a + 2b + c.
enum class Qubit { A = 0, B = 1, C = 2 };

/// Bit weight of a qubit within the 3-qubit basis index (A -> 4, B -> 2, C -> 1).
constexpr std::size_t bit_weight(Qubit q) noexcept {
    return std::size_t{1} << (2 - static_cast<int>(q));
}

char to_char(Qubit q) noexcept;
Qubit qubit_from_char(char c);

struct QubitPair {
    Qubit first;
    Qubit second;
};

/// The qubit not contained in `pair`.
Qubit complement(QubitPair pair);

/// Dense square complex matrix of dimension 2, 4 or 8, row-major.
class CMatrix {
public:
    explicit CMatrix(std::size_t dim);
    CMatrix(std::size_t dim, std::initializer_list<Complex> row_major);

    static CMatrix identity(std::size_t dim);
    static CMatrix diagonal(std::span<const double> values);
    /// |v><v| for a vector of length 2, 4 or 8.
    static CMatrix outer(std::span<const Complex> v);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    std::span<const Complex> entries() const noexcept { return data_; }

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix& operator*=(Complex s);

    friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
    friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
    friend CMatrix operator*(CMatrix lhs, Complex s) { return lhs *= s; }
    friend CMatrix operator*(Complex s, CMatrix rhs) { return rhs *= s; }

    bool all_finite() const noexcept;

private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

CMatrix conjugate(const CMatrix& m);
CMatrix transpose(const CMatrix& m);
CMatrix adjoint(const CMatrix& m);
Complex trace(const CMatrix& m);
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
/// Largest entrywise modulus of m - m^dagger.
double hermiticity_defect(const CMatrix& m);

namespace pauli {
CMatrix x();
CMatrix y();
CMatrix z();
/// sigma_y (x) sigma_y, the two-qubit spin-flip operator.
CMatrix yy();
}  // namespace pauli

/// Reduced state of `keep` from the pure three-qubit vector `amplitudes`.
/// Row/column index is 2x + y with x the value of keep.first.
/// Callers are responsible for normalization; see states.hpp for the
/// validated overloads.
CMatrix reduce_to_pair(std::span<const Complex, 8> amplitudes, QubitPair keep);
CMatrix reduce_to_single(std::span<const Complex, 8> amplitudes, Qubit keep);

/// Trace out one qubit of a 4x4 two-qubit matrix. `keep_first` keeps the
/// more significant qubit.
CMatrix trace_out_two_qubit(const CMatrix& rho, bool keep_first);

struct HermitianEigen {
    std::vector<double> values;  // descending
    CMatrix vectors;             // column k pairs with values[k]
};

/// Tolerance on max |m - m^dagger| accepted by the eigensolvers.
inline constexpr double kHermitianTolerance = 1e-10;

/// Cyclic complex Jacobi eigensolver. Throws ValidationError on
/// non-Hermitian input.
HermitianEigen hermitian_eigen(const CMatrix& m);
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

/// Singular values (descending) of an arbitrary square complex matrix by
/// one-sided Jacobi. Small singular values keep absolute accuracy of order
/// eps * ||m||.
std::vector<double> singular_values(const CMatrix& m);

}  // namespace monogamy
