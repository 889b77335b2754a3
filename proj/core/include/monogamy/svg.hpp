#pragma once

#include <string>
#include <vector>

namespace monogamy {

struct PlotSeries {
    std::string name;
    std::string color;
    std::vector<double> y;
};

/// Minimal line + marker chart: axes, one polyline per series, legend.
/// Every marker carries a <title> with its exact value.
struct Plot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> x;
    std::vector<PlotSeries> series;
};

std::string render_svg(const Plot& plot);

}  // namespace monogamy
