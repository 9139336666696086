#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ctxwit {

/// One polyline of a plot, in data coordinates.
struct SvgCurve {
    std::string label;
    std::string color;
    bool dashed = false;
    std::vector<std::pair<double, double>> points;
};

/// Self-contained static SVG document: axes over [0,1] x [0,1] with 0.2
/// ticks, the given polylines, and a legend. Deterministic output.
std::string render_svg_plot(const std::string& title, const std::string& x_label,
                            const std::string& y_label, const std::vector<SvgCurve>& curves);

}  // namespace ctxwit
