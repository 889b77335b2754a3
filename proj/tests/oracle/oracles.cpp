#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace monogamy::oracle {

namespace {

CMatrix givens_qr_qh(const CMatrix& a, CMatrix& r) {
    const std::size_t n = a.dim();
    r = a;
    CMatrix qh = CMatrix::identity(n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t i = n - 1; i > j; --i) {
            const Complex x = r(i - 1, j), y = r(i, j);
            const double rad = std::hypot(std::abs(x), std::abs(y));
            if (rad == 0.0) continue;
            const Complex g00 = std::conj(x) / rad, g01 = std::conj(y) / rad;
            const Complex g10 = -y / rad, g11 = x / rad;
            for (std::size_t k = 0; k < n; ++k) {
                const Complex u = r(i - 1, k), v = r(i, k);
                r(i - 1, k) = g00 * u + g01 * v;
                r(i, k) = g10 * u + g11 * v;
                const Complex qu = qh(i - 1, k), qv = qh(i, k);
                qh(i - 1, k) = g00 * qu + g01 * qv;
                qh(i, k) = g10 * qu + g11 * qv;
            }
        }
    }
    return qh;
}

}  // namespace

std::vector<Complex> general_eigenvalues(const CMatrix& m) {
    const std::size_t n = m.dim();
    CMatrix a = m;
    std::vector<Complex> eig;
    std::size_t active = n;
    int stall = 0;
    while (active > 0) {
        if (active == 1) {
            eig.push_back(a(0, 0));
            break;
        }
        const std::size_t last = active - 1;
        double sub = 0.0, scale = 0.0;
        for (std::size_t j = 0; j < last; ++j) sub = std::max(sub, std::abs(a(last, j)));
        for (std::size_t i = 0; i < active; ++i)
            for (std::size_t j = 0; j < active; ++j) scale = std::max(scale, std::abs(a(i, j)));
        if (sub <= 1e-16 * std::max(scale, 1e-300) || stall > 2000) {
            eig.push_back(a(last, last));
            --active;
            stall = 0;
            continue;
        }
        // Wilkinson shift from the trailing 2x2 block.
        const Complex p = a(last - 1, last - 1), q = a(last - 1, last), s = a(last, last - 1), t = a(last, last);
        const Complex half_tr = 0.5 * (p + t);
        const Complex disc = std::sqrt(half_tr * half_tr - (p * t - q * s));
        Complex mu1 = half_tr + disc, mu2 = half_tr - disc;
        Complex mu = std::abs(mu1 - t) < std::abs(mu2 - t) ? mu1 : mu2;
        if (stall > 0 && stall % 50 == 0) mu += Complex{0.1 * scale, 0.05 * scale};

        CMatrix shifted(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                shifted(i, j) = (i < active && j < active) ? a(i, j) - (i == j ? mu : Complex{}) : (i == j ? Complex{1.0} : Complex{});
        CMatrix r(n);
        const CMatrix qh = givens_qr_qh(shifted, r);
        const CMatrix next = r * adjoint(qh);
        for (std::size_t i = 0; i < active; ++i)
            for (std::size_t j = 0; j < active; ++j) a(i, j) = next(i, j) + (i == j ? mu : Complex{});
        ++stall;
    }
    return eig;
}

std::array<double, 4> wootters_lambdas(const CMatrix& rho) {
    // sigma_y x sigma_y written out by hand.
    const CMatrix yy(4, {0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0});
    const CMatrix tilde = yy * conjugate(rho) * yy;
    const auto ev = general_eigenvalues(rho * tilde);
    std::array<double, 4> l{};
    for (std::size_t i = 0; i < 4; ++i) l[i] = std::sqrt(std::max(ev[i].real(), 0.0));
    std::sort(l.begin(), l.end(), std::greater<>());
    return l;
}

double wootters_concurrence(const CMatrix& rho) {
    const auto l = wootters_lambdas(rho);
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

CMatrix partial_trace_explicit(const std::array<Complex, 8>& psi, std::vector<int> keep) {
    CMatrix full(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) full(i, j) = psi[i] * std::conj(psi[j]);
    auto digit = [](int index, int qubit) { return (index >> (2 - qubit)) & 1; };
    const std::size_t dim = std::size_t{1} << keep.size();
    CMatrix out(dim);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            bool traced_equal = true;
            for (int q = 0; q < 3; ++q) {
                if (std::find(keep.begin(), keep.end(), q) != keep.end()) continue;
                if (digit(i, q) != digit(j, q)) traced_equal = false;
            }
            if (!traced_equal) continue;
            std::size_t ri = 0, rj = 0;
            for (int q : keep) {
                ri = 2 * ri + digit(i, q);
                rj = 2 * rj + digit(j, q);
            }
            out(ri, rj) += full(i, j);
        }
    return out;
}

double hyperdeterminant_tangle(const std::array<Complex, 8>& a) {
    auto x = [&](int i, int j, int k) { return a[4 * i + 2 * j + k]; };
    const Complex d1 = x(0, 0, 0) * x(0, 0, 0) * x(1, 1, 1) * x(1, 1, 1) +
                       x(0, 0, 1) * x(0, 0, 1) * x(1, 1, 0) * x(1, 1, 0) +
                       x(0, 1, 0) * x(0, 1, 0) * x(1, 0, 1) * x(1, 0, 1) +
                       x(1, 0, 0) * x(1, 0, 0) * x(0, 1, 1) * x(0, 1, 1);
    const Complex d2 = x(0, 0, 0) * x(1, 1, 1) * x(0, 1, 1) * x(1, 0, 0) +
                       x(0, 0, 0) * x(1, 1, 1) * x(1, 0, 1) * x(0, 1, 0) +
                       x(0, 0, 0) * x(1, 1, 1) * x(1, 1, 0) * x(0, 0, 1) +
                       x(0, 1, 1) * x(1, 0, 0) * x(1, 0, 1) * x(0, 1, 0) +
                       x(0, 1, 1) * x(1, 0, 0) * x(1, 1, 0) * x(0, 0, 1) +
                       x(1, 0, 1) * x(0, 1, 0) * x(1, 1, 0) * x(0, 0, 1);
    const Complex d3 = x(0, 0, 0) * x(1, 1, 0) * x(1, 0, 1) * x(0, 1, 1) +
                       x(1, 1, 1) * x(0, 0, 1) * x(0, 1, 0) * x(1, 0, 0);
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

std::vector<Complex> haar_vector(std::size_t n, std::mt19937_64& gen) {
    std::normal_distribution<double> normal;
    std::vector<Complex> v(n);
    double norm2 = 0.0;
    for (auto& z : v) {
        z = {normal(gen), normal(gen)};
        norm2 += std::norm(z);
    }
    for (auto& z : v) z /= std::sqrt(norm2);
    return v;
}

CMatrix random_unitary(std::size_t n, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    CMatrix u = CMatrix::identity(n);
    for (int round = 0; round < 3; ++round) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double th = angle(gen), ph = angle(gen);
                CMatrix g = CMatrix::identity(n);
                g(p, p) = std::cos(th);
                g(p, q) = -std::sin(th) * std::polar(1.0, ph);
                g(q, p) = std::sin(th) * std::polar(1.0, -ph);
                g(q, q) = std::cos(th);
                u = u * g;
            }
        CMatrix phases = CMatrix::identity(n);
        for (std::size_t k = 0; k < n; ++k) phases(k, k) = std::polar(1.0, angle(gen));
        u = u * phases;
    }
    return u;
}

std::array<Complex, 8> apply_local(const std::array<Complex, 8>& psi, const CMatrix& u, int qubit) {
    const int w = 1 << (2 - qubit);
    std::array<Complex, 8> out{};
    for (int i = 0; i < 8; ++i) {
        const int bit = (i & w) ? 1 : 0;
        const int base = i & ~w;
        out[i] = u(bit, 0) * psi[base] + u(bit, 1) * psi[base | w];
    }
    return out;
}

}  // namespace monogamy::oracle
