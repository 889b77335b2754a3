// monogamy: entanglement measures and monogamy inequalities for pure
// three-qubit states.
//
//   monogamy analyze --family ghz
//   monogamy ensemble --family canonical-a --n 100 --seed 7 --out runs.csv
//   monogamy scan --family bell-product --param p1 --from 0 --to 1 --steps 1001
//   monogamy figures --which 1 --out-dir figs
//   monogamy discrepancy --family a --n 200
//
// Exit status: 0 ok, 1 usage error, 2 validation error, 3 invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "monogamy/error.hpp"
#include "monogamy/experiments.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/state_io.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kInvariant = 3 };

struct StateOptions {
    std::string family;
    std::string state_file;
    std::array<std::optional<double>, 5> p;
    double theta = 0.0;
};

struct CommonOptions {
    std::string pivot = "A";
    double tol = monogamy::kDefaultSaturationTolerance;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out;
};

void add_param_flags(CLI::App* cmd, StateOptions& s) {
    for (std::size_t i = 0; i < 5; ++i) {
        cmd->add_option_function<double>(
            fmt::format("--p{}", i + 1), [&s, i](double v) { s.p[i] = v; },
            fmt::format("family parameter p{}", i + 1));
    }
    cmd->add_option("--theta", s.theta, "phase of the |000> amplitude for canonical families");
}

void add_common_flags(CLI::App* cmd, CommonOptions& c, bool with_out = true) {
    cmd->add_option("--pivot", c.pivot, "pivot qubit")->check(CLI::IsMember({"A", "B", "C"}));
    cmd->add_option("--tol", c.tol, "saturation tolerance on the tight gap")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "64-bit random seed");
    cmd->add_option("--format", c.format, "machine-readable output format")
        ->check(CLI::IsMember({"csv", "json"}));
    if (with_out) cmd->add_option("--out", c.out, "output file (default: stdout)");
}

monogamy::Qubit pivot_of(const CommonOptions& c) { return monogamy::qubit_from_char(c.pivot.at(0)); }

std::array<double, 5> canonical_params(const StateOptions& s) {
    std::array<double, 5> p{};
    for (std::size_t i = 0; i < 5; ++i) p[i] = s.p[i].value_or(0.0);
    return p;
}

monogamy::StateFamilySpec family_spec(const StateOptions& s, std::uint64_t seed) {
    using namespace monogamy;
    if (s.family == "ghz") return family::Ghz{};
    if (s.family == "w") return family::W{};
    if (s.family == "bell-product") {
        if (!s.p[0]) throw ValidationError("bell-product needs --p1");
        return family::BellProduct{*s.p[0]};
    }
    if (s.family == "canonical-a") return family::CanonicalA{canonical_params(s), s.theta};
    if (s.family == "canonical-b") return family::CanonicalB{canonical_params(s), s.theta};
    if (s.family == "haar") return family::Haar{seed};
    throw ValidationError("unknown family '" + s.family + "'");
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw monogamy::ValidationError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    bool to_file() const { return file_.is_open(); }
    void finish() {
        stream().flush();
        if (!stream()) throw monogamy::ValidationError("failed writing output");
    }

private:
    std::ofstream file_;
};

int run_analyze(const StateOptions& s, const CommonOptions& c) {
    using namespace monogamy;
    if (s.family.empty() == s.state_file.empty())
        throw ValidationError("analyze needs exactly one of --family or --state");

    RunRecord rec;
    PureState3Q psi = make_ghz();
    if (!s.state_file.empty()) {
        psi = read_state_file(s.state_file);
        rec.report = build_report(psi, pivot_of(c), c.tol);
        rec.spec = family::Ghz{};  // parameter-free placeholder
        rec.family_label = "file";
    } else {
        rec.spec = family_spec(s, c.seed);
        check_parameters(rec.spec);
        psi = make_state(rec.spec);
        rec.report = build_report(psi, pivot_of(c), c.tol);
    }
    rec.classification = classify(*rec.report, c.tol);

    Output out(c.out);
    std::cout << "state: " << format_state(psi) << '\n' << describe(*rec.report);
    std::cout << "classification: " << to_string(rec.classification) << "\n\n";
    if (c.format == "json") {
        nlohmann::json j = to_json(*rec.report);
        j["class"] = std::string(to_string(rec.classification));
        j["state"] = nlohmann::json::parse(format_state(psi));
        if (!s.state_file.empty()) j["source"] = s.state_file;
        else j["family"] = std::string(family_name(rec.spec));
        out.stream() << j.dump(2) << '\n';
    } else {
        write_csv(out.stream(), {rec});
    }
    out.finish();
    check_report_invariants(*rec.report);
    return rec.classification == Classification::Violated ? kInvariant : kOk;
}

int run_ensemble_cmd(const std::string& family, std::size_t n, const CommonOptions& c) {
    using namespace monogamy;
    const auto fam = parse_ensemble_family(family);
    if (!fam) throw ValidationError("ensemble family must be canonical-a, canonical-b or haar");
    EnsembleConfig cfg;
    cfg.family = *fam;
    cfg.count = n;
    cfg.seed = c.seed;
    cfg.pivot = pivot_of(c);
    cfg.tolerance = c.tol;
    cfg.workers = 0;
    const auto records = run_ensemble(cfg);
    const EnsembleSummary summary = summarize(records);

    Output out(c.out);
    if (c.format == "json" && !out.to_file()) {
        nlohmann::json j;
        j["summary"] = to_json(summary);
        j["records"] = nlohmann::json::array();
        for (const auto& r : records) {
            check_report_invariants(*r.report);
            j["records"].push_back(to_json(r));
        }
        std::cout << j.dump(2) << '\n';
    } else {
        write_csv(out.stream(), records);
        out.finish();
        std::ostream& info = out.to_file() ? std::cout : std::cerr;
        if (c.format == "json") info << to_json(summary).dump(2) << '\n';
        else info << describe(summary);
    }
    return summary.violated ? kInvariant : kOk;
}

int run_scan_cmd(monogamy::ScanConfig cfg, const StateOptions& s, const CommonOptions& c) {
    using namespace monogamy;
    cfg.family = s.family;
    cfg.base_p = canonical_params(s);
    cfg.base_theta = s.theta;
    cfg.pivot = pivot_of(c);
    cfg.tolerance = c.tol;
    const auto records = run_scan(cfg);
    Output out(c.out);
    if (c.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : records) j.push_back(to_json(r));
        out.stream() << j.dump(2) << '\n';
    } else {
        write_csv(out.stream(), records, /*with_note=*/true);
    }
    out.finish();
    const EnsembleSummary summary = summarize(records);
    if (out.to_file()) std::cout << describe(summary);
    return summary.violated ? kInvariant : kOk;
}

/// `which` = 0 writes all four.
int run_figures_cmd(int which, const std::string& out_dir, const CommonOptions& c) {
    using namespace monogamy;
    int status = kOk;
    for (int w = which == 0 ? 1 : which; w <= (which == 0 ? 4 : which); ++w) {
        const FigureOutput fig = run_figure(w, c.seed);
        const auto paths = write_figure(fig, out_dir);
        const EnsembleSummary summary = summarize(fig.records);
        std::cout << "wrote " << paths[0].string() << " and " << paths[1].string() << '\n';
        std::cout << describe(summary);
        if (summary.violated) status = kInvariant;
    }
    return status;
}

int run_discrepancy_cmd(const std::string& family, std::size_t n, const CommonOptions& c) {
    using namespace monogamy;
    CanonicalKind kind;
    if (family == "a" || family == "canonical-a") kind = CanonicalKind::A;
    else if (family == "b" || family == "canonical-b") kind = CanonicalKind::B;
    else throw ValidationError("discrepancy family must be a or b");
    const DiscrepancyReport rep = run_discrepancy(kind, n, c.seed);
    if (c.format == "json") std::cout << to_json(rep).dump(2) << '\n';
    else std::cout << describe(rep);
    if (!c.out.empty()) {
        Output out(c.out);
        write_discrepancy_csv(out.stream(), rep);
        out.finish();
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement monogamy of pure three-qubit states"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    StateOptions state;
    CommonOptions common;

    auto* analyze = app.add_subcommand("analyze", "report measures and inequalities for one state");
    analyze->add_option("--family", state.family, "ghz | w | bell-product | canonical-a | canonical-b | haar");
    analyze->add_option("--state", state.state_file, "JSON file with 8 [re, im] amplitudes");
    add_param_flags(analyze, state);
    add_common_flags(analyze, common);

    std::string ensemble_family;
    std::size_t n = 100;
    auto* ensemble = app.add_subcommand("ensemble", "evaluate a random ensemble");
    ensemble->add_option("--family", ensemble_family, "canonical-a | canonical-b | haar")->required();
    ensemble->add_option("--n", n, "number of states")->check(CLI::PositiveNumber);
    add_common_flags(ensemble, common);

    monogamy::ScanConfig scan_cfg;
    auto* scan = app.add_subcommand("scan", "sweep one family parameter");
    scan->add_option("--family", state.family, "bell-product | canonical-a | canonical-b")->required();
    scan->add_option("--param", scan_cfg.parameter, "p1..p5 or theta");
    scan->add_option("--from", scan_cfg.from, "first grid value");
    scan->add_option("--to", scan_cfg.to, "last grid value");
    scan->add_option("--steps", scan_cfg.steps, "number of grid points")->check(CLI::PositiveNumber);
    add_param_flags(scan, state);
    add_common_flags(scan, common);

    int which = 0;
    std::string out_dir = ".";
    auto* figures = app.add_subcommand("figures", "regenerate comparison figure data (CSV + SVG)");
    figures->add_option("--which", which, "figure number (default: all)")->check(CLI::IsMember({1, 2, 3, 4}));
    figures->add_option("--out-dir", out_dir, "output directory");
    add_common_flags(figures, common, /*with_out=*/false);

    std::string disc_family = "a";
    auto* discrepancy = app.add_subcommand("discrepancy", "audit printed closed forms for canonical families");
    discrepancy->add_option("--family", disc_family, "a | b");
    discrepancy->add_option("--n", n, "number of samples")->check(CLI::PositiveNumber);
    add_common_flags(discrepancy, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) return run_analyze(state, common);
        if (*ensemble) return run_ensemble_cmd(ensemble_family, n, common);
        if (*scan) return run_scan_cmd(scan_cfg, state, common);
        if (*figures) return run_figures_cmd(which, out_dir, common);
        if (*discrepancy) return run_discrepancy_cmd(disc_family, n, common);
    } catch (const monogamy::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kUsage;
}
