#include "monogamy/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "monogamy/error.hpp"

namespace monogamy {

namespace {

void require_supported_dim(std::size_t dim) {
    if (dim != 2 && dim != 4 && dim != 8) {
        throw DimensionError("matrix dimension must be 2, 4 or 8, got " + std::to_string(dim));
    }
}

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" +
                             std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
}

constexpr int kMaxSweeps = 100;

}  // namespace

char to_char(Qubit q) noexcept {
    switch (q) {
        case Qubit::A: return 'A';
        case Qubit::B: return 'B';
        case Qubit::C: return 'C';
    }
    return '?';
}

Qubit qubit_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return Qubit::A;
        case 'B': case 'b': return Qubit::B;
        case 'C': case 'c': return Qubit::C;
        default: break;
    }
    throw ValidationError(std::string("unknown qubit label '") + c + "'");
}

Qubit complement(QubitPair pair) {
    if (pair.first == pair.second) {
        throw ValidationError("qubit pair must name two distinct qubits");
    }
    return static_cast<Qubit>(3 - static_cast<int>(pair.first) - static_cast<int>(pair.second));
}

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) { require_supported_dim(dim); }

CMatrix::CMatrix(std::size_t dim, std::initializer_list<Complex> row_major) : CMatrix(dim) {
    if (row_major.size() != dim * dim) {
        throw DimensionError("entry count " + std::to_string(row_major.size()) +
                             " does not match dimension " + std::to_string(dim));
    }
    std::copy(row_major.begin(), row_major.end(), data_.begin());
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
    CMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

CMatrix CMatrix::outer(std::span<const Complex> v) {
    CMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    require_same_dim(*this, rhs, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
    require_same_dim(*this, rhs, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
}

bool CMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }

CMatrix conjugate(const CMatrix& m) {
    CMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = std::conj(m(i, j));
    return out;
}

CMatrix transpose(const CMatrix& m) {
    CMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(j, i);
    return out;
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

Complex trace(const CMatrix& m) {
    Complex t{};
    for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    CMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

double hermiticity_defect(const CMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

namespace pauli {
CMatrix x() { return CMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
CMatrix y() { return CMatrix(2, {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}); }
CMatrix z() { return CMatrix(2, {1.0, 0.0, 0.0, -1.0}); }
CMatrix yy() { return kron(y(), y()); }
}  // namespace pauli

CMatrix reduce_to_pair(std::span<const Complex, 8> amplitudes, QubitPair keep) {
    const Qubit traced = complement(keep);
    const std::size_t w_hi = bit_weight(keep.first);
    const std::size_t w_lo = bit_weight(keep.second);
    const std::size_t w_tr = bit_weight(traced);
    auto index = [&](std::size_t kept, std::size_t t) {
        return ((kept >> 1) & 1U) * w_hi + (kept & 1U) * w_lo + t * w_tr;
    };
    CMatrix rho(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Complex acc{};
            for (std::size_t t = 0; t < 2; ++t)
                acc += amplitudes[index(i, t)] * std::conj(amplitudes[index(j, t)]);
            rho(i, j) = acc;
        }
    return rho;
}

CMatrix reduce_to_single(std::span<const Complex, 8> amplitudes, Qubit keep) {
    const std::size_t w = bit_weight(keep);
    CMatrix rho(2);
    for (std::size_t rest = 0; rest < 8; ++rest) {
        if (rest & w) continue;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                rho(i, j) += amplitudes[rest + i * w] * std::conj(amplitudes[rest + j * w]);
    }
    return rho;
}

CMatrix trace_out_two_qubit(const CMatrix& rho, bool keep_first) {
    if (rho.dim() != 4) throw DimensionError("trace_out_two_qubit expects a 4x4 matrix");
    CMatrix out(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t t = 0; t < 2; ++t) {
                out(i, j) += keep_first ? rho(2 * i + t, 2 * j + t) : rho(2 * t + i, 2 * t + j);
            }
    return out;
}

HermitianEigen hermitian_eigen(const CMatrix& m) {
    const double defect = hermiticity_defect(m);
    if (!(defect <= kHermitianTolerance)) {
        throw ValidationError("matrix is not Hermitian (max |m - m^dagger| = " +
                              std::to_string(defect) + ")");
    }
    const std::size_t n = m.dim();
    CMatrix a = m;
    CMatrix v = CMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    const double threshold = 1e-14 * static_cast<double>(n);
    for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                // Phase e^{-i phi} on column q makes a(p,q) real, then a real
                // Jacobi rotation annihilates it.
                const Complex phase = std::conj(a(p, q)) / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double zeta = (aqq - app) / (2.0 * r);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // U restricted to (p,q): [[c, s], [-s*phase, c*phase]]
                const Complex upp = c, upq = s, uqp = -s * phase, uqq = c * phase;
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });
    HermitianEigen out{std::vector<double>(n), CMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) { return hermitian_eigen(m).values; }

std::vector<double> singular_values(const CMatrix& m) {
    const std::size_t n = m.dim();
    CMatrix a = m;
    auto column_dot = [&](std::size_t p, std::size_t q) {
        Complex s{};
        for (std::size_t k = 0; k < n; ++k) s += std::conj(a(k, p)) * a(k, q);
        return s;
    };
    auto column_norm2 = [&](std::size_t p) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += std::norm(a(k, p));
        return s;
    };

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = column_norm2(p);
                const double beta = column_norm2(q);
                const Complex gamma = column_dot(p, q);
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const Complex phase = std::conj(gamma) / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex ap = a(k, p);
                    const Complex aq = a(k, q) * phase;
                    a(k, p) = c * ap - s * aq;
                    a(k, q) = s * ap + c * aq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sv(n);
    for (std::size_t p = 0; p < n; ++p) sv[p] = std::sqrt(column_norm2(p));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

}  // namespace monogamy
