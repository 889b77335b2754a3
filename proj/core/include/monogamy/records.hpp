#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "monogamy/inequalities.hpp"
#include "monogamy/states.hpp"

namespace monogamy {

/// One evaluated state. `report` is empty for scan points that were skipped
/// (infeasible parameters); `note` says why.
struct RunRecord {
    std::size_t index = 0;
    StateFamilySpec spec;
    std::optional<MonogamyReport> report;
    Classification classification = Classification::Strict;
    std::string note;
    /// Replaces the family column when non-empty (e.g. "file" for states read
    /// from disk, whose `spec` carries no parameters).
    std::string family_label;
};

RunRecord make_record(std::size_t index, const StateFamilySpec& spec, Qubit pivot, double tol);

inline constexpr std::string_view kCsvHeader =
    "index,family,p1,p2,p3,p4,p5,theta,c2_ab,c2_ac,c2_abc,tau,rhs_fei,rhs_tight,gap_fei,gap_tight,class";

/// Shortest decimal form that round-trips: 17 significant digits.
std::string format_number(double x);

/// Writes the fixed header, optionally followed by ",note".
void write_csv_header(std::ostream& out, bool with_note = false);
/// Re-validates the record's report (InvariantViolation) and writes one row.
void write_csv_row(std::ostream& out, const RunRecord& record, bool with_note = false);
void write_csv(std::ostream& out, const std::vector<RunRecord>& records, bool with_note = false);

nlohmann::json to_json(const MonogamyReport& report);
nlohmann::json to_json(const RunRecord& record);

/// Multi-line, human-readable rendering of a report.
std::string describe(const MonogamyReport& report);

}  // namespace monogamy
