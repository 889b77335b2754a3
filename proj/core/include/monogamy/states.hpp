#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "monogamy/rng.hpp"
#include "monogamy/tensor.hpp"

namespace monogamy {

using Amplitudes = std::array<Complex, 8>;

/// Normalized pure state of three qubits, amplitudes indexed |abc> -> 4a+2b+c.
/// Only obtainable through `PureState3Q::validate`, so every instance has unit
/// norm to within 1e-12 and finite entries.
class PureState3Q {
public:
    /// Accepts amplitudes whose norm lies in [1 - 1e-6, 1 + 1e-6] and rescales
    /// them to unit norm (vectors already normalized to rounding are kept as
    /// is). Throws ValidationError otherwise or on NaN/Inf.
    static PureState3Q validate(const Amplitudes& amplitudes);

    const Amplitudes& amplitudes() const noexcept { return amps_; }
    std::span<const Complex, 8> span() const noexcept { return amps_; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

    /// Reduced density matrix of `keep` (4x4, first label most significant).
    CMatrix reduced(QubitPair keep) const { return reduce_to_pair(amps_, keep); }
    CMatrix reduced(Qubit keep) const { return reduce_to_single(amps_, keep); }

private:
    explicit PureState3Q(const Amplitudes& a) : amps_(a) {}
    Amplitudes amps_;
};

inline constexpr double kNormWindow = 1e-6;
inline constexpr double kParameterNormTolerance = 1e-12;

namespace family {

struct Ghz {};
struct W {};
/// sqrt(p1) |Psi^-> |0> + sqrt(1 - p1) |00> |1>; p1 is a probability.
struct BellProduct {
    double p1 = 0.0;
};
/// p1 e^{i theta}|000> + p2|001> + p3|100> + p4|110> + p5|111>.
/// Here the p_i are amplitudes: sum p_i^2 = 1.
struct CanonicalA {
    std::array<double, 5> p{};
    double theta = 0.0;
};
/// p1 e^{i theta}|000> + p2|001> + p3|010> + p4|100> + p5|111>.
struct CanonicalB {
    std::array<double, 5> p{};
    double theta = 0.0;
};
struct Haar {
    std::uint64_t seed = 0;
};

}  // namespace family

using StateFamilySpec =
    std::variant<family::Ghz, family::W, family::BellProduct, family::CanonicalA,
                 family::CanonicalB, family::Haar>;

enum class CanonicalKind { A, B };

/// Family tag as used on the command line and in CSV output
/// ("ghz", "w", "bell-product", "canonical-a", "canonical-b", "haar").
std::string_view family_name(const StateFamilySpec& spec);

PureState3Q make_ghz();
PureState3Q make_w();
PureState3Q make_bell_product(double p1);
PureState3Q make_canonical_a(const std::array<double, 5>& p, double theta);
PureState3Q make_canonical_b(const std::array<double, 5>& p, double theta);
PureState3Q make_canonical(CanonicalKind kind, const std::array<double, 5>& p, double theta);

/// Haar-random state: eight i.i.d. standard complex Gaussians, normalized.
PureState3Q sample_haar(Rng& rng);

/// Random canonical-family parameters: (p1^2..p5^2) uniform on the simplex
/// from sorted-uniform spacings, theta uniform on [0, pi).
StateFamilySpec sample_canonical(Rng& rng, CanonicalKind kind);

/// Checks the parameter domain of a family spec; throws ValidationError.
void check_parameters(const StateFamilySpec& spec);

PureState3Q make_state(const StateFamilySpec& spec);

}  // namespace monogamy
