#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monogamy/records.hpp"
#include "monogamy/svg.hpp"

namespace monogamy {

/// Families that can be sampled.
enum class EnsembleFamily { CanonicalA, CanonicalB, Haar };

std::optional<EnsembleFamily> parse_ensemble_family(std::string_view name);

struct EnsembleConfig {
    EnsembleFamily family = EnsembleFamily::Haar;
    std::size_t count = 100;
    std::uint64_t seed = 1;
    Qubit pivot = Qubit::A;
    double tolerance = kDefaultSaturationTolerance;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 1;
};

/// Draws member `index` of an ensemble from its own stream (seed, index).
StateFamilySpec ensemble_member(EnsembleFamily family, std::uint64_t seed, std::size_t index);

/// One record per member, in index order; independent of `workers`.
std::vector<RunRecord> run_ensemble(const EnsembleConfig& config);

struct Stats {
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
};

struct EnsembleSummary {
    std::size_t count = 0;
    Stats gap_fei;
    Stats gap_tight;
    std::size_t saturated = 0;
    std::size_t strict = 0;
    std::size_t violated = 0;
};

EnsembleSummary summarize(const std::vector<RunRecord>& records);
nlohmann::json to_json(const EnsembleSummary& summary);
std::string describe(const EnsembleSummary& summary);

/// Parameter sweep of one family parameter on an inclusive uniform grid.
///
/// For canonical families the normalization is restored by solving for p5
/// (or for p1 when p5 is the swept parameter); points where that is
/// impossible are kept as records without a report and a note.
struct ScanConfig {
    std::string family = "bell-product";  // bell-product | canonical-a | canonical-b
    std::string parameter = "p1";         // p1..p5 | theta
    double from = 0.0;
    double to = 1.0;
    std::size_t steps = 101;  // number of grid points
    std::array<double, 5> base_p{};
    double base_theta = 0.0;
    Qubit pivot = Qubit::A;
    double tolerance = kDefaultSaturationTolerance;
};

std::vector<RunRecord> run_scan(const ScanConfig& config);

/// Data and rendering for one of the four comparison figures.
struct FigureOutput {
    int which = 1;
    std::vector<RunRecord> records;
    Plot plot;
};

inline constexpr std::size_t kFigureSamples = 100;

/// 1: canonical-a samples, C^2_A(BC) vs tight and Fei RHS.
/// 2: canonical-a slice p2=0.17, p3=0.16, p4=0.15, theta=0, p1 in [0.4, 0.5].
/// 3: canonical-a samples, LHS vs tight RHS.
/// 4: canonical-b samples, LHS vs tight RHS.
FigureOutput run_figure(int which, std::uint64_t seed);

/// Writes figureN.csv and figureN.svg into `out_dir`; returns the paths.
std::array<std::filesystem::path, 2> write_figure(const FigureOutput& figure,
                                                  const std::filesystem::path& out_dir);

/// Closed-form expressions printed for the canonical families, compared
/// against the numerical ground truth.
struct FormulaCheck {
    std::string quantity;    // c2_ab, c2_ac, c2_abc, tau, tau (unsquared)
    std::string expression;  // the printed expression
    double max_abs_deviation = 0.0;
    double mean_abs_deviation = 0.0;
    bool confirmed = false;  // max deviation <= kClosedFormTolerance
};

inline constexpr double kClosedFormTolerance = 1e-10;

struct DiscrepancySample {
    std::size_t index = 0;
    std::array<double, 5> p{};
    double theta = 0.0;
    std::array<double, 5> numeric{};  // order of DiscrepancyReport::checks
    std::array<double, 5> printed{};
};

struct DiscrepancyReport {
    CanonicalKind family = CanonicalKind::A;
    std::vector<FormulaCheck> checks;
    std::vector<DiscrepancySample> samples;
};

/// Closed forms printed for a canonical family, in the order c2_ab, c2_ac,
/// c2_abc, tau, tau (unsquared: 2 sqrt of the printed tau).
std::array<double, 5> printed_closed_forms(CanonicalKind kind, const std::array<double, 5>& p,
                                           double theta);

/// Audits `n` random samples of the family (family B samples use theta = 0,
/// the setting its closed forms were stated for).
DiscrepancyReport run_discrepancy(CanonicalKind kind, std::size_t n, std::uint64_t seed);
DiscrepancyReport run_discrepancy(CanonicalKind kind,
                                  const std::vector<std::pair<std::array<double, 5>, double>>& params);

std::string describe(const DiscrepancyReport& report);
void write_discrepancy_csv(std::ostream& out, const DiscrepancyReport& report);
nlohmann::json to_json(const DiscrepancyReport& report);

}  // namespace monogamy
