#include "ctxwit/svg.hpp"

#include <sstream>

#include "ctxwit/format.hpp"

namespace ctxwit {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 620.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 430.0;

double map_x(double x) { return kLeft + x * (kRight - kLeft); }
double map_y(double y) { return kBottom - y * (kBottom - kTop); }

std::string px(double v) {
    // One decimal of pixel precision keeps files small and stable.
    const double r = static_cast<double>(static_cast<long long>(v * 10.0 + (v >= 0 ? 0.5 : -0.5))) / 10.0;
    return fmt9(r);
}

}  // namespace

std::string render_svg_plot(const std::string& title, const std::string& x_label,
                            const std::string& y_label, const std::vector<SvgCurve>& curves) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt9(kWidth) << "\" height=\""
        << fmt9(kHeight) << "\" viewBox=\"0 0 " << fmt9(kWidth) << " " << fmt9(kHeight) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << px((kLeft + kRight) / 2) << "\" y=\"28\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    // Axes and ticks.
    out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    out << "<path d=\"M " << px(kLeft) << " " << px(kTop) << " L " << px(kLeft) << " "
        << px(kBottom) << " L " << px(kRight) << " " << px(kBottom) << "\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double v = i / 5.0;
        out << "<line x1=\"" << px(map_x(v)) << "\" y1=\"" << px(kBottom) << "\" x2=\""
            << px(map_x(v)) << "\" y2=\"" << px(kBottom + 6) << "\"/>\n";
        out << "<line x1=\"" << px(kLeft - 6) << "\" y1=\"" << px(map_y(v)) << "\" x2=\""
            << px(kLeft) << "\" y2=\"" << px(map_y(v)) << "\"/>\n";
    }
    out << "</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double v = i / 5.0;
        out << "<text x=\"" << px(map_x(v)) << "\" y=\"" << px(kBottom + 20)
            << "\" text-anchor=\"middle\">" << fmt9(v) << "</text>\n";
        out << "<text x=\"" << px(kLeft - 10) << "\" y=\"" << px(map_y(v) + 4)
            << "\" text-anchor=\"end\">" << fmt9(v) << "</text>\n";
    }
    out << "<text x=\"" << px((kLeft + kRight) / 2) << "\" y=\"" << px(kBottom + 42)
        << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    out << "<text x=\"18\" y=\"" << px((kTop + kBottom) / 2) << "\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " << px((kTop + kBottom) / 2) << ")\">" << y_label
        << "</text>\n";
    out << "</g>\n";

    for (const SvgCurve& curve : curves) {
        if (curve.points.empty()) {
            continue;
        }
        out << "<polyline fill=\"none\" stroke=\"" << curve.color << "\" stroke-width=\"1.5\"";
        if (curve.dashed) {
            out << " stroke-dasharray=\"6 4\"";
        }
        out << " points=\"";
        bool first = true;
        for (const auto& [x, y] : curve.points) {
            if (!first) {
                out << " ";
            }
            first = false;
            out << px(map_x(x)) << "," << px(map_y(y));
        }
        out << "\"/>\n";
    }

    // Legend.
    double ly = kTop + 10.0;
    for (const SvgCurve& curve : curves) {
        out << "<line x1=\"" << px(kLeft + 14) << "\" y1=\"" << px(ly) << "\" x2=\""
            << px(kLeft + 44) << "\" y2=\"" << px(ly) << "\" stroke=\"" << curve.color
            << "\" stroke-width=\"1.5\"";
        if (curve.dashed) {
            out << " stroke-dasharray=\"6 4\"";
        }
        out << "/>\n";
        out << "<text x=\"" << px(kLeft + 50) << "\" y=\"" << px(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << curve.label << "</text>\n";
        ly += 18.0;
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace ctxwit
