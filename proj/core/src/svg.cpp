#include "monogamy/svg.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "monogamy/error.hpp"
#include "monogamy/records.hpp"

namespace monogamy {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!(hi > lo)) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
};

}  // namespace

std::string render_svg(const Plot& plot) {
    for (const auto& s : plot.series) {
        if (s.y.size() != plot.x.size()) throw DimensionError("series length differs from x length");
    }
    Range xr, yr;
    for (double v : plot.x) xr.include(v);
    for (const auto& s : plot.series)
        for (double v : s.y) yr.include(v);
    xr.pad();
    yr.pad();

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto sx = [&](double v) { return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto sy = [&](double v) { return kTop + (yr.hi - v) / (yr.hi - yr.lo) * ph; };

    std::string out;
    out += fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n",
        kWidth, kHeight);
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth, kHeight);
    out += fmt::format("<text x=\"{}\" y=\"24\" font-size=\"16\" text-anchor=\"middle\">{}</text>\n",
                       kLeft + pw / 2, escape(plot.title));

    // axes and ticks
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", kLeft,
                       kTop + ph, kLeft + pw);
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", kLeft, kTop,
                       kTop + ph);
    for (int i = 0; i <= 4; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
        const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
        out += fmt::format(
            "<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"11\" text-anchor=\"middle\">{:.4g}</text>\n", sx(fx),
            kTop + ph + 16, fx);
        out += fmt::format(
            "<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"11\" text-anchor=\"end\">{:.4g}</text>\n", kLeft - 6,
            sy(fy) + 4, fy);
    }
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"13\" text-anchor=\"middle\">{}</text>\n",
                       kLeft + pw / 2, kHeight - 16, escape(plot.x_label));
    out += fmt::format(
        "<text x=\"18\" y=\"{:.2f}\" font-size=\"13\" text-anchor=\"middle\" "
        "transform=\"rotate(-90 18 {:.2f})\">{}</text>\n",
        kTop + ph / 2, kTop + ph / 2, escape(plot.y_label));

    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const auto& s = plot.series[k];
        out += fmt::format("<g class=\"series\" data-name=\"{}\">\n", escape(s.name));
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.2\" points=\"", s.color);
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            out += fmt::format("{}{:.2f},{:.2f}", i ? " " : "", sx(plot.x[i]), sy(s.y[i]));
        }
        out += "\"/>\n";
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            out += fmt::format(
                "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2\" fill=\"{}\"><title>{}</title></circle>\n",
                sx(plot.x[i]), sy(s.y[i]), s.color, format_number(s.y[i]));
        }
        out += "</g>\n";
        const double ly = kTop + 10 + 20.0 * static_cast<double>(k);
        out += fmt::format(
            "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"{3}\" stroke-width=\"2\"/>\n",
            kLeft + pw + 12, ly, kLeft + pw + 32, s.color);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"12\">{}</text>\n", kLeft + pw + 38,
                           ly + 4, escape(s.name));
    }
    out += "</svg>\n";
    return out;
}

}  // namespace monogamy
