#include "monogamy/rng.hpp"

#include <cmath>
#include <numbers>

namespace monogamy {

namespace {

std::mt19937_64 seeded_engine(std::initializer_list<std::uint32_t> words) {
    std::seed_seq seq(words);
    return std::mt19937_64(seq);
}

std::uint32_t lo(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
std::uint32_t hi(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(seeded_engine({lo(seed), hi(seed)})) {}

Rng::Rng(std::uint64_t seed, std::uint64_t index, bool)
    : engine_(seeded_engine({lo(seed), hi(seed), lo(index), hi(index), 0x9e3779b9U})) {}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) { return Rng(seed, index, true); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

}  // namespace monogamy
