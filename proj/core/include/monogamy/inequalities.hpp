#pragma once

#include <string_view>

#include "monogamy/states.hpp"
#include "monogamy/tensor.hpp"

namespace monogamy {

inline constexpr double kDefaultSaturationTolerance = 1e-9;
/// Slack allowed on CKW margins and on the report invariants.
inline constexpr double kInvariantTolerance = 1e-9;

enum class Classification { Saturated, Strict, Violated };

std::string_view to_string(Classification c);

/// Everything computed for one state and one pivot qubit.
///
/// For pivot P with remaining qubits X < Y (alphabetically), `c2_ab` is
/// C^2_{PX}, `c2_ac` is C^2_{PY} and `c2_abc` is C^2_{P(XY)}.
struct MonogamyReport {
    struct Raw {
        double c2_ab = 0.0;
        double c2_ac = 0.0;
        double c2_abc = 0.0;
        double tau = 0.0;
    };

    Qubit pivot = Qubit::A;
    double c2_ab = 0.0;
    double c2_ac = 0.0;
    double c2_abc = 0.0;
    double tau = 0.0;
    double rhs_fei = 0.0;
    double rhs_tight = 0.0;
    double gap_fei = 0.0;
    double gap_tight = 0.0;
    bool saturated_tight = false;
    Raw raw_unclamped;
};

struct CkwResult {
    bool holds = false;
    double margin = 0.0;
};

/// C^2_AB + C^2_AC <= C^2_A(BC); margin = c2_abc - c2_ab - c2_ac.
CkwResult ckw_holds(const MonogamyReport& report);

/// 2 sqrt(C^2_AB C^2_AC + tau^2 / 4).
double fei_rhs(const MonogamyReport& report);

/// 2 sqrt((C^2_AB + tau/2)(C^2_AC + tau/2)).
double tight_rhs(const MonogamyReport& report);

/// saturated iff |gap_tight| <= tol, violated iff gap_tight < -tol.
Classification classify(const MonogamyReport& report, double tol = kDefaultSaturationTolerance);

MonogamyReport build_report(const PureState3Q& psi, Qubit pivot,
                            double tol = kDefaultSaturationTolerance);

/// Throws InvariantViolation if the report breaks one of its invariants
/// (tau decomposition, tight <= Fei gap ordering, ranges).
void check_report_invariants(const MonogamyReport& report);

}  // namespace monogamy
