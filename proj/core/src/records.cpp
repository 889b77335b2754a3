#include "monogamy/records.hpp"

#include <ostream>
#include <sstream>
#include <type_traits>
#include <variant>

#include <fmt/format.h>

namespace monogamy {

namespace {

struct ParameterColumns {
    std::array<std::optional<double>, 5> p{};
    std::optional<double> theta;
};

ParameterColumns parameter_columns(const StateFamilySpec& spec) {
    ParameterColumns cols;
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, family::BellProduct>) {
                cols.p[0] = f.p1;
                cols.p[1] = 1.0 - f.p1;
            } else if constexpr (std::is_same_v<T, family::CanonicalA> ||
                                 std::is_same_v<T, family::CanonicalB>) {
                for (std::size_t i = 0; i < 5; ++i) cols.p[i] = f.p[i];
                cols.theta = f.theta;
            }
        },
        spec);
    return cols;
}

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string{}; }

}  // namespace

RunRecord make_record(std::size_t index, const StateFamilySpec& spec, Qubit pivot, double tol) {
    RunRecord rec;
    rec.index = index;
    rec.spec = spec;
    rec.report = build_report(make_state(spec), pivot, tol);
    rec.classification = classify(*rec.report, tol);
    return rec;
}

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

void write_csv_header(std::ostream& out, bool with_note) {
    out << kCsvHeader;
    if (with_note) out << ",note";
    out << '\n';
}

void write_csv_row(std::ostream& out, const RunRecord& rec, bool with_note) {
    const ParameterColumns cols = parameter_columns(rec.spec);
    out << rec.index << ',' << (rec.family_label.empty() ? family_name(rec.spec) : rec.family_label);
    for (const auto& p : cols.p) out << ',' << cell(p);
    out << ',' << cell(cols.theta);
    if (rec.report) {
        const MonogamyReport& r = *rec.report;
        check_report_invariants(r);
        for (double v : {r.c2_ab, r.c2_ac, r.c2_abc, r.tau, r.rhs_fei, r.rhs_tight, r.gap_fei,
                         r.gap_tight}) {
            out << ',' << format_number(v);
        }
        out << ',' << to_string(rec.classification);
    } else {
        out << ",,,,,,,,,";
    }
    if (with_note) out << ',' << rec.note;
    out << '\n';
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records, bool with_note) {
    write_csv_header(out, with_note);
    for (const auto& rec : records) write_csv_row(out, rec, with_note);
}

nlohmann::json to_json(const MonogamyReport& r) {
    return {
        {"pivot", std::string(1, to_char(r.pivot))},
        {"c2_ab", r.c2_ab},
        {"c2_ac", r.c2_ac},
        {"c2_abc", r.c2_abc},
        {"tau", r.tau},
        {"rhs_fei", r.rhs_fei},
        {"rhs_tight", r.rhs_tight},
        {"gap_fei", r.gap_fei},
        {"gap_tight", r.gap_tight},
        {"saturated_tight", r.saturated_tight},
        {"raw_unclamped",
         {{"c2_ab", r.raw_unclamped.c2_ab},
          {"c2_ac", r.raw_unclamped.c2_ac},
          {"c2_abc", r.raw_unclamped.c2_abc},
          {"tau", r.raw_unclamped.tau}}},
    };
}

nlohmann::json to_json(const RunRecord& rec) {
    nlohmann::json j;
    j["index"] = rec.index;
    j["family"] = rec.family_label.empty() ? std::string(family_name(rec.spec)) : rec.family_label;
    const ParameterColumns cols = parameter_columns(rec.spec);
    for (std::size_t i = 0; i < 5; ++i) {
        if (cols.p[i]) j["p" + std::to_string(i + 1)] = *cols.p[i];
    }
    if (cols.theta) j["theta"] = *cols.theta;
    if (rec.report) {
        j["report"] = to_json(*rec.report);
        j["class"] = std::string(to_string(rec.classification));
    }
    if (!rec.note.empty()) j["note"] = rec.note;
    return j;
}

std::string describe(const MonogamyReport& r) {
    const char p = to_char(r.pivot);
    const auto pairs = [&] {
        std::string others;
        for (char c : {'A', 'B', 'C'})
            if (c != p) others += c;
        return others;
    }();
    const CkwResult ckw = ckw_holds(r);
    std::ostringstream s;
    s << fmt::format("pivot {}\n", p);
    s << fmt::format("  C^2_{}{}     = {:.12g}\n", p, pairs[0], r.c2_ab);
    s << fmt::format("  C^2_{}{}     = {:.12g}\n", p, pairs[1], r.c2_ac);
    s << fmt::format("  C^2_{}({})  = {:.12g}\n", p, pairs, r.c2_abc);
    s << fmt::format("  tau        = {:.12g}\n", r.tau);
    s << fmt::format("  CKW        : {} (margin {:.6g})\n", ckw.holds ? "holds" : "VIOLATED", ckw.margin);
    s << fmt::format("  Fei RHS    = {:.12g}  gap {:.6g}\n", r.rhs_fei, r.gap_fei);
    s << fmt::format("  tight RHS  = {:.12g}  gap {:.6g}\n", r.rhs_tight, r.gap_tight);
    s << fmt::format("  tight bound saturated: {}\n", r.saturated_tight ? "yes" : "no");
    return s.str();
}

}  // namespace monogamy
