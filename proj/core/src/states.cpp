#include "monogamy/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "monogamy/error.hpp"

namespace monogamy {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_canonical(const std::array<double, 5>& p, double theta) {
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!std::isfinite(p[i]) || p[i] < 0.0) {
            throw ValidationError("canonical parameter p" + std::to_string(i + 1) +
                                  " must be finite and non-negative");
        }
        sum += p[i] * p[i];
    }
    if (std::abs(sum - 1.0) > kParameterNormTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "canonical parameters must satisfy sum p_i^2 = 1 (got " << sum << ")";
        throw ValidationError(msg.str());
    }
    if (!std::isfinite(theta) || theta < 0.0 || theta >= std::numbers::pi) {
        throw ValidationError("theta must lie in [0, pi)");
    }
}

}  // namespace

PureState3Q PureState3Q::validate(const Amplitudes& amplitudes) {
    double norm2 = 0.0;
    for (const auto& a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("state amplitudes must be finite");
        }
        norm2 += std::norm(a);
    }
    const double norm = std::sqrt(norm2);
    if (!(std::abs(norm - 1.0) <= kNormWindow)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "state norm " << norm << " outside [1 - 1e-6, 1 + 1e-6]";
        throw ValidationError(msg.str());
    }
    Amplitudes out = amplitudes;
    if (std::abs(norm2 - 1.0) > 4 * std::numeric_limits<double>::epsilon()) {
        for (auto& a : out) a /= norm;
    }
    return PureState3Q(out);
}

std::string_view family_name(const StateFamilySpec& spec) {
    return std::visit(overloaded{
                          [](const family::Ghz&) { return std::string_view("ghz"); },
                          [](const family::W&) { return std::string_view("w"); },
                          [](const family::BellProduct&) { return std::string_view("bell-product"); },
                          [](const family::CanonicalA&) { return std::string_view("canonical-a"); },
                          [](const family::CanonicalB&) { return std::string_view("canonical-b"); },
                          [](const family::Haar&) { return std::string_view("haar"); },
                      },
                      spec);
}

PureState3Q make_ghz() {
    const double h = std::numbers::sqrt2 / 2.0;
    Amplitudes a{};
    a[0] = h;
    a[7] = h;
    return PureState3Q::validate(a);
}

PureState3Q make_w() {
    const double t = 1.0 / std::sqrt(3.0);
    Amplitudes a{};
    a[1] = t;
    a[2] = t;
    a[4] = t;
    return PureState3Q::validate(a);
}

PureState3Q make_bell_product(double p1) {
    if (!std::isfinite(p1) || p1 < 0.0 || p1 > 1.0) {
        throw ValidationError("bell-product p1 must lie in [0, 1]");
    }
    const double p2 = 1.0 - p1;
    Amplitudes a{};
    a[0b010] = std::sqrt(p1 / 2.0);
    a[0b100] = -std::sqrt(p1 / 2.0);
    a[0b001] = std::sqrt(p2);
    return PureState3Q::validate(a);
}

PureState3Q make_canonical(CanonicalKind kind, const std::array<double, 5>& p, double theta) {
    check_canonical(p, theta);
    static constexpr std::array<std::size_t, 5> kIndexA{0, 1, 4, 6, 7};
    static constexpr std::array<std::size_t, 5> kIndexB{0, 1, 2, 4, 7};
    const auto& index = kind == CanonicalKind::A ? kIndexA : kIndexB;
    Amplitudes a{};
    for (std::size_t i = 0; i < 5; ++i) a[index[i]] = p[i];
    a[0] = std::polar(p[0], theta);
    return PureState3Q::validate(a);
}

PureState3Q make_canonical_a(const std::array<double, 5>& p, double theta) {
    return make_canonical(CanonicalKind::A, p, theta);
}

PureState3Q make_canonical_b(const std::array<double, 5>& p, double theta) {
    return make_canonical(CanonicalKind::B, p, theta);
}

PureState3Q sample_haar(Rng& rng) {
    Amplitudes a{};
    double norm2 = 0.0;
    for (auto& x : a) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        x = Complex{re, im} * (std::numbers::sqrt2 / 2.0);
        norm2 += std::norm(x);
    }
    const double norm = std::sqrt(norm2);
    for (auto& x : a) x /= norm;
    return PureState3Q::validate(a);
}

StateFamilySpec sample_canonical(Rng& rng, CanonicalKind kind) {
    std::array<double, 4> cuts{};
    for (auto& c : cuts) c = rng.uniform();
    std::sort(cuts.begin(), cuts.end());
    std::array<double, 5> p{};
    double previous = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        p[i] = cuts[i] - previous;
        previous = cuts[i];
    }
    p[4] = 1.0 - previous;
    for (auto& x : p) x = std::sqrt(x);
    const double theta = std::numbers::pi * rng.uniform();
    if (kind == CanonicalKind::A) return family::CanonicalA{p, theta};
    return family::CanonicalB{p, theta};
}

void check_parameters(const StateFamilySpec& spec) {
    std::visit(overloaded{
                   [](const family::BellProduct& f) {
                       if (!std::isfinite(f.p1) || f.p1 < 0.0 || f.p1 > 1.0)
                           throw ValidationError("bell-product p1 must lie in [0, 1]");
                   },
                   [](const family::CanonicalA& f) { check_canonical(f.p, f.theta); },
                   [](const family::CanonicalB& f) { check_canonical(f.p, f.theta); },
                   [](const auto&) {},
               },
               spec);
}

PureState3Q make_state(const StateFamilySpec& spec) {
    return std::visit(overloaded{
                          [](const family::Ghz&) { return make_ghz(); },
                          [](const family::W&) { return make_w(); },
                          [](const family::BellProduct& f) { return make_bell_product(f.p1); },
                          [](const family::CanonicalA& f) { return make_canonical_a(f.p, f.theta); },
                          [](const family::CanonicalB& f) { return make_canonical_b(f.p, f.theta); },
                          [](const family::Haar& f) {
                              Rng rng(f.seed);
                              return sample_haar(rng);
                          },
                      },
                      spec);
}

}  // namespace monogamy
