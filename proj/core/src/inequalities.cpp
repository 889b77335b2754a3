#include "monogamy/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "monogamy/error.hpp"
#include "monogamy/measures.hpp"

namespace monogamy {

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Saturated: return "saturated";
        case Classification::Strict: return "strict";
        case Classification::Violated: return "violated";
    }
    return "unknown";
}

CkwResult ckw_holds(const MonogamyReport& r) {
    const double margin = r.c2_abc - r.c2_ab - r.c2_ac;
    return {margin >= -kInvariantTolerance, margin};
}

double fei_rhs(const MonogamyReport& r) {
    return 2.0 * std::sqrt(std::max(r.c2_ab * r.c2_ac + r.tau * r.tau / 4.0, 0.0));
}

double tight_rhs(const MonogamyReport& r) {
    return 2.0 * std::sqrt(std::max((r.c2_ab + r.tau / 2.0) * (r.c2_ac + r.tau / 2.0), 0.0));
}

Classification classify(const MonogamyReport& r, double tol) {
    if (!(tol > 0.0)) throw ValidationError("classification tolerance must be positive");
    if (std::abs(r.gap_tight) <= tol) return Classification::Saturated;
    if (r.gap_tight < -tol) return Classification::Violated;
    return Classification::Strict;
}

MonogamyReport build_report(const PureState3Q& psi, Qubit pivot, double tol) {
    const auto pairs = pivot_pairs(pivot);
    MonogamyReport r;
    r.pivot = pivot;

    const double c_x = concurrence_mixed(psi.reduced(pairs[0]));
    const double c_y = concurrence_mixed(psi.reduced(pairs[1]));
    r.raw_unclamped.c2_ab = c_x * c_x;
    r.raw_unclamped.c2_ac = c_y * c_y;
    r.raw_unclamped.c2_abc = concurrence_sq_bipartition_raw(psi, pivot);
    r.raw_unclamped.tau = r.raw_unclamped.c2_abc - r.raw_unclamped.c2_ab - r.raw_unclamped.c2_ac;

    r.c2_ab = std::clamp(r.raw_unclamped.c2_ab, 0.0, 1.0);
    r.c2_ac = std::clamp(r.raw_unclamped.c2_ac, 0.0, 1.0);
    r.c2_abc = std::clamp(r.raw_unclamped.c2_abc, 0.0, 1.0);
    r.tau = std::clamp(r.raw_unclamped.tau, 0.0, 1.0);

    r.rhs_fei = fei_rhs(r);
    r.rhs_tight = tight_rhs(r);
    r.gap_fei = r.c2_abc - r.rhs_fei;
    r.gap_tight = r.c2_abc - r.rhs_tight;
    r.saturated_tight = classify(r, tol) == Classification::Saturated;
    return r;
}

void check_report_invariants(const MonogamyReport& r) {
    std::ostringstream problems;
    problems.precision(17);
    if (std::abs(r.c2_abc - (r.c2_ab + r.c2_ac + r.tau)) > kInvariantTolerance) {
        problems << "c2_abc != c2_ab + c2_ac + tau; ";
    }
    if (r.gap_tight > r.gap_fei + 1e-12) {
        problems << "gap_tight " << r.gap_tight << " exceeds gap_fei " << r.gap_fei << "; ";
    }
    for (double v : {r.c2_ab, r.c2_ac, r.c2_abc, r.tau}) {
        if (!(v >= 0.0 && v <= 1.0)) problems << "squared concurrence or tau out of [0,1]; ";
    }
    const std::string text = problems.str();
    if (!text.empty()) throw InvariantViolation("report invariant broken: " + text);
}

}  // namespace monogamy
