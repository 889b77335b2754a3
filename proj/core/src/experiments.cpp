#include "monogamy/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "monogamy/error.hpp"

namespace monogamy {

std::optional<EnsembleFamily> parse_ensemble_family(std::string_view name) {
    if (name == "canonical-a") return EnsembleFamily::CanonicalA;
    if (name == "canonical-b") return EnsembleFamily::CanonicalB;
    if (name == "haar") return EnsembleFamily::Haar;
    return std::nullopt;
}

StateFamilySpec ensemble_member(EnsembleFamily family, std::uint64_t seed, std::size_t index) {
    Rng rng = Rng::stream(seed, index);
    switch (family) {
        case EnsembleFamily::CanonicalA: return sample_canonical(rng, CanonicalKind::A);
        case EnsembleFamily::CanonicalB: return sample_canonical(rng, CanonicalKind::B);
        case EnsembleFamily::Haar: return family::Haar{rng.next_u64()};
    }
    throw ValidationError("unknown ensemble family");
}

std::vector<RunRecord> run_ensemble(const EnsembleConfig& config) {
    if (config.count == 0) throw ValidationError("ensemble count must be at least 1");
    if (!(config.tolerance > 0.0)) throw ValidationError("tolerance must be positive");

    std::vector<RunRecord> records(config.count);
    auto evaluate = [&](std::size_t i) {
        records[i] = make_record(i, ensemble_member(config.family, config.seed, i), config.pivot,
                                 config.tolerance);
    };

    unsigned workers = config.workers == 0 ? std::thread::hardware_concurrency() : config.workers;
    workers = std::clamp<unsigned>(workers, 1U, static_cast<unsigned>(std::min<std::size_t>(config.count, 64)));
    if (workers == 1) {
        for (std::size_t i = 0; i < config.count; ++i) evaluate(i);
        return records;
    }

    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < config.count; i += workers) evaluate(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return records;
}

namespace {

Stats stats_of(std::vector<double> v) {
    if (v.empty()) return {};
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    const double median = n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    return {v.front(), median, v.back()};
}

}  // namespace

EnsembleSummary summarize(const std::vector<RunRecord>& records) {
    EnsembleSummary s;
    std::vector<double> fei, tight;
    for (const auto& rec : records) {
        if (!rec.report) continue;
        ++s.count;
        fei.push_back(rec.report->gap_fei);
        tight.push_back(rec.report->gap_tight);
        switch (rec.classification) {
            case Classification::Saturated: ++s.saturated; break;
            case Classification::Strict: ++s.strict; break;
            case Classification::Violated: ++s.violated; break;
        }
    }
    s.gap_fei = stats_of(std::move(fei));
    s.gap_tight = stats_of(std::move(tight));
    return s;
}

nlohmann::json to_json(const EnsembleSummary& s) {
    auto stats = [](const Stats& st) {
        return nlohmann::json{{"min", st.min}, {"median", st.median}, {"max", st.max}};
    };
    return {{"count", s.count},         {"gap_fei", stats(s.gap_fei)}, {"gap_tight", stats(s.gap_tight)},
            {"saturated", s.saturated}, {"strict", s.strict},          {"violated", s.violated}};
}

std::string describe(const EnsembleSummary& s) {
    std::string out = fmt::format("states evaluated : {}\n", s.count);
    out += fmt::format("gap_fei   min/median/max : {:.6g} / {:.6g} / {:.6g}\n", s.gap_fei.min,
                       s.gap_fei.median, s.gap_fei.max);
    out += fmt::format("gap_tight min/median/max : {:.6g} / {:.6g} / {:.6g}\n", s.gap_tight.min,
                       s.gap_tight.median, s.gap_tight.max);
    out += fmt::format("saturated {} | strict {} | violated {}\n", s.saturated, s.strict, s.violated);
    return out;
}

namespace {

std::optional<std::size_t> canonical_slot(std::string_view parameter) {
    if (parameter.size() == 2 && parameter[0] == 'p' && parameter[1] >= '1' && parameter[1] <= '5')
        return static_cast<std::size_t>(parameter[1] - '1');
    return std::nullopt;
}

std::vector<double> grid(double from, double to, std::size_t steps) {
    std::vector<double> g(steps);
    if (steps == 1) {
        g[0] = from;
        return g;
    }
    for (std::size_t k = 0; k < steps; ++k) {
        g[k] = k + 1 == steps ? to : from + (to - from) * static_cast<double>(k) / static_cast<double>(steps - 1);
    }
    return g;
}

}  // namespace

std::vector<RunRecord> run_scan(const ScanConfig& config) {
    if (config.steps == 0) throw ValidationError("scan needs at least one grid point");
    if (!(config.tolerance > 0.0)) throw ValidationError("tolerance must be positive");
    if (!std::isfinite(config.from) || !std::isfinite(config.to))
        throw ValidationError("scan bounds must be finite");

    const bool bell = config.family == "bell-product";
    const bool canon_a = config.family == "canonical-a";
    const bool canon_b = config.family == "canonical-b";
    if (!bell && !canon_a && !canon_b) {
        throw ValidationError("scan supports bell-product, canonical-a and canonical-b, not '" +
                              config.family + "'");
    }
    const auto slot = canonical_slot(config.parameter);
    if (bell && config.parameter != "p1") throw ValidationError("bell-product scans sweep p1");
    if (!bell && !slot && config.parameter != "theta")
        throw ValidationError("canonical scans sweep one of p1..p5 or theta");

    std::vector<RunRecord> records;
    const auto points = grid(config.from, config.to, config.steps);
    records.reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        const double x = points[k];
        RunRecord rec;
        rec.index = k;
        if (bell) {
            rec.spec = family::BellProduct{x};
        } else {
            std::array<double, 5> p = config.base_p;
            double theta = config.base_theta;
            if (slot) p[*slot] = x;
            else theta = x;
            const std::size_t solve = slot == std::size_t{4} ? 0 : 4;
            double rest = 1.0;
            for (std::size_t i = 0; i < 5; ++i)
                if (i != solve) rest -= p[i] * p[i];
            p[solve] = std::sqrt(std::max(rest, 0.0));
            if (canon_a) rec.spec = family::CanonicalA{p, theta};
            else rec.spec = family::CanonicalB{p, theta};
            if (rest < -kParameterNormTolerance) {
                rec.note = fmt::format("infeasible: p{} would need a negative square", solve + 1);
                records.push_back(std::move(rec));
                continue;
            }
        }
        try {
            check_parameters(rec.spec);
            rec.report = build_report(make_state(rec.spec), config.pivot, config.tolerance);
            rec.classification = classify(*rec.report, config.tolerance);
        } catch (const ValidationError& e) {
            rec.note = std::string("infeasible: ") + e.what();
        }
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

constexpr const char* kRed = "#d62728";
constexpr const char* kGreen = "#2ca02c";
constexpr const char* kBlack = "#000000";

std::vector<double> column(const std::vector<RunRecord>& records, double MonogamyReport::*field) {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back((*r.report).*field);
    return out;
}

std::vector<RunRecord> canonical_samples(EnsembleFamily family, std::uint64_t seed) {
    EnsembleConfig cfg;
    cfg.family = family;
    cfg.count = kFigureSamples;
    cfg.seed = seed;
    return run_ensemble(cfg);
}

}  // namespace

FigureOutput run_figure(int which, std::uint64_t seed) {
    FigureOutput fig;
    fig.which = which;
    switch (which) {
        case 1:
        case 3:
            fig.records = canonical_samples(EnsembleFamily::CanonicalA, seed);
            break;
        case 4:
            fig.records = canonical_samples(EnsembleFamily::CanonicalB, seed);
            break;
        case 2: {
            ScanConfig scan;
            scan.family = "canonical-a";
            scan.parameter = "p1";
            scan.from = 0.4;
            scan.to = 0.5;
            scan.steps = 101;
            scan.base_p = {0.0, 0.17, 0.16, 0.15, 0.0};
            scan.base_theta = 0.0;
            fig.records = run_scan(scan);
            for (const auto& r : fig.records)
                if (!r.report) throw InvariantViolation("figure 2 slice contains an infeasible point");
            break;
        }
        default:
            throw ValidationError("figure must be 1, 2, 3 or 4");
    }

    Plot& plot = fig.plot;
    if (which == 2) {
        plot.x_label = "p1 (p5 from normalization)";
        for (const auto& r : fig.records) plot.x.push_back(std::get<family::CanonicalA>(r.spec).p[0]);
    } else {
        plot.x_label = "sample index";
        for (const auto& r : fig.records) plot.x.push_back(static_cast<double>(r.index));
    }
    plot.y_label = "value";
    const auto lhs = column(fig.records, &MonogamyReport::c2_abc);
    const auto tight = column(fig.records, &MonogamyReport::rhs_tight);
    if (which == 1 || which == 2) {
        plot.title = which == 1 ? "canonical-a samples: C^2_A(BC) vs product bounds"
                                : "canonical-a slice p2=0.17 p3=0.16 p4=0.15 theta=0";
        plot.series = {{"C^2_A(BC)", kRed, lhs},
                       {"tight RHS", kGreen, tight},
                       {"Fei RHS", kBlack, column(fig.records, &MonogamyReport::rhs_fei)}};
    } else {
        plot.title = which == 3 ? "canonical-a samples: tight product inequality"
                                : "canonical-b samples: tight product inequality";
        plot.series = {{"C^2_A(BC)", kRed, lhs}, {"tight RHS", kBlack, tight}};
    }
    return fig;
}

std::array<std::filesystem::path, 2> write_figure(const FigureOutput& figure,
                                                  const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const auto stem = out_dir / fmt::format("figure{}", figure.which);
    std::array<std::filesystem::path, 2> paths{stem, stem};
    paths[0].replace_extension(".csv");
    paths[1].replace_extension(".svg");

    std::ofstream csv(paths[0], std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + paths[0].string());
    write_csv(csv, figure.records);
    std::ofstream svg(paths[1], std::ios::binary);
    if (!svg) throw std::runtime_error("cannot write " + paths[1].string());
    svg << render_svg(figure.plot);
    if (!csv || !svg) throw std::runtime_error("failed writing figure output");
    return paths;
}

std::array<double, 5> printed_closed_forms(CanonicalKind kind, const std::array<double, 5>& p,
                                           double theta) {
    const auto [p1, p2, p3, p4, p5] = p;
    auto sq = [](double x) { return x * x; };
    std::array<double, 5> f{};
    if (kind == CanonicalKind::A) {
        const double c = std::cos(theta);
        f[0] = 4.0 * (sq(p2) * sq(p5) + sq(p1) * sq(p4) * sq(c) + 2.0 * p1 * p2 * p4 * p5 * c);
        f[1] = 4.0 * sq(p2) * sq(p3);
        f[2] = 4.0 * (sq(sq(p1)) - sq(p2) + sq(sq(p2)) + sq(p1) * (1.0 - 2.0 * sq(p2) - sq(p3)));
        f[3] = 4.0 * sq(sq(p2) * sq(p4) + sq(p1) * sq(p5) - 2.0 * p1 * p2 * p4 * p5 * c);
    } else {
        f[0] = 4.0 * sq(p3 * p4 - p2 * p5);
        f[1] = 4.0 * sq(p2 * p4 - p3 * p5);
        f[2] = -4.0 * (sq(p4) - sq(p5) + sq(sq(p5)) + sq(p4) * (-1.0 + sq(p1) + 2.0 * sq(p5)));
        f[3] = 4.0 * sq(p5) * sq(4.0 * p2 * p3 * p4 + sq(p1) * p5);
    }
    f[4] = 2.0 * std::sqrt(std::max(f[3], 0.0));
    return f;
}

namespace {

const std::array<std::string, 5> kQuantities{"c2_ab", "c2_ac", "c2_abc", "tau", "tau_unsquared"};

std::array<std::string, 5> printed_expressions(CanonicalKind kind) {
    if (kind == CanonicalKind::A) {
        return {"4(p2^2 p5^2 + p1^2 p4^2 cos^2(theta) + 2 p1 p2 p4 p5 cos(theta))",
                "4 p2^2 p3^2",
                "4(p1^4 - p2^2 + p2^4 + p1^2 (1 - 2 p2^2 - p3^2))",
                "4(p2^2 p4^2 + p1^2 p5^2 - 2 p1 p2 p4 p5 cos(theta))^2",
                "2 sqrt(printed tau) = 4(p2^2 p4^2 + p1^2 p5^2 - 2 p1 p2 p4 p5 cos(theta))"};
    }
    return {"4(p3 p4 - p2 p5)^2",
            "4(p2 p4 - p3 p5)^2",
            "-4(p4^2 - p5^2 + p5^4 + p4^2 (-1 + p1^2 + 2 p5^2))",
            "4 p5^2 (4 p2 p3 p4 + p1^2 p5)^2",
            "2 sqrt(printed tau) = 4 p5 (4 p2 p3 p4 + p1^2 p5)"};
}

}  // namespace

DiscrepancyReport run_discrepancy(
    CanonicalKind kind, const std::vector<std::pair<std::array<double, 5>, double>>& params) {
    DiscrepancyReport rep;
    rep.family = kind;
    const auto expressions = printed_expressions(kind);
    rep.checks.resize(5);
    for (std::size_t k = 0; k < 5; ++k) {
        rep.checks[k].quantity = kQuantities[k];
        rep.checks[k].expression = expressions[k];
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto& [p, theta] = params[i];
        DiscrepancySample s;
        s.index = i;
        s.p = p;
        s.theta = theta;
        const MonogamyReport r = build_report(make_canonical(kind, p, theta), Qubit::A);
        s.numeric = {r.c2_ab, r.c2_ac, r.c2_abc, r.tau, r.tau};
        s.printed = printed_closed_forms(kind, p, theta);
        for (std::size_t k = 0; k < 5; ++k) {
            const double dev = std::abs(s.printed[k] - s.numeric[k]);
            rep.checks[k].max_abs_deviation = std::max(rep.checks[k].max_abs_deviation, dev);
            rep.checks[k].mean_abs_deviation += dev;
        }
        rep.samples.push_back(s);
    }
    for (auto& c : rep.checks) {
        if (!params.empty()) c.mean_abs_deviation /= static_cast<double>(params.size());
        c.confirmed = c.max_abs_deviation <= kClosedFormTolerance;
    }
    return rep;
}

DiscrepancyReport run_discrepancy(CanonicalKind kind, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ValidationError("discrepancy needs at least one sample");
    const EnsembleFamily fam = kind == CanonicalKind::A ? EnsembleFamily::CanonicalA : EnsembleFamily::CanonicalB;
    std::vector<std::pair<std::array<double, 5>, double>> params;
    params.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const StateFamilySpec spec = ensemble_member(fam, seed, i);
        if (kind == CanonicalKind::A) {
            const auto& f = std::get<family::CanonicalA>(spec);
            params.emplace_back(f.p, f.theta);
        } else {
            params.emplace_back(std::get<family::CanonicalB>(spec).p, 0.0);
        }
    }
    return run_discrepancy(kind, params);
}

std::string describe(const DiscrepancyReport& rep) {
    std::string out = fmt::format("closed-form audit, family canonical-{} ({} samples)\n",
                                  rep.family == CanonicalKind::A ? 'a' : 'b', rep.samples.size());
    out += fmt::format("{:<14} {:>12} {:>12}  {:<9}  {}\n", "quantity", "max |dev|", "mean |dev|", "status",
                       "printed form");
    for (const auto& c : rep.checks) {
        out += fmt::format("{:<14} {:>12.3e} {:>12.3e}  {:<9}  {}\n", c.quantity, c.max_abs_deviation,
                           c.mean_abs_deviation, c.confirmed ? "confirmed" : "differs", c.expression);
    }
    return out;
}

void write_discrepancy_csv(std::ostream& out, const DiscrepancyReport& rep) {
    out << "index,p1,p2,p3,p4,p5,theta";
    for (const auto& q : kQuantities) out << ',' << q << "_numeric," << q << "_printed," << q << "_deviation";
    out << '\n';
    for (const auto& s : rep.samples) {
        out << s.index;
        for (double v : s.p) out << ',' << format_number(v);
        out << ',' << format_number(s.theta);
        for (std::size_t k = 0; k < 5; ++k) {
            out << ',' << format_number(s.numeric[k]) << ',' << format_number(s.printed[k]) << ','
                << format_number(std::abs(s.printed[k] - s.numeric[k]));
        }
        out << '\n';
    }
}

nlohmann::json to_json(const DiscrepancyReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"quantity", c.quantity},
                          {"expression", c.expression},
                          {"max_abs_deviation", c.max_abs_deviation},
                          {"mean_abs_deviation", c.mean_abs_deviation},
                          {"confirmed", c.confirmed}});
    }
    return {{"family", rep.family == CanonicalKind::A ? "canonical-a" : "canonical-b"},
            {"samples", rep.samples.size()},
            {"checks", checks}};
}

}  // namespace monogamy
