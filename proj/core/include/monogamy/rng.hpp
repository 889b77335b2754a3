#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace monogamy {

/// Seedable, platform-independent random stream.
///
/// Wraps std::mt19937_64 seeded through std::seed_seq; both are fully
/// specified by the standard, so a (seed, stream) pair yields the same
/// sequence everywhere. Uniform and Gaussian variates are derived by hand
/// because the std distributions are implementation-defined.
///
/// Single-owner: give each worker its own Rng (see `Rng::stream`).
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    /// Independent stream for ensemble member `index` under `seed`.
    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal variate (Box-Muller; the second variate is cached).
    double gaussian();

private:
    Rng(std::uint64_t seed, std::uint64_t index, bool);

    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace monogamy
