#include "cvx/svgplot.hpp"

#include <algorithm>
#include <cstdio>

namespace cvx {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 48.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Mapper {
    double min_x, min_y, sx, sy;

    double X(double x) const { return kMargin + (x - min_x) * sx; }
    double Y(double y) const { return kHeight - kMargin - (y - min_y) * sy; }
};

}  // namespace

std::string render_svg(const PointSeq& seq, const PolygonVerdict& verdict) {
    const auto& pts = seq.points();
    const std::size_t n = pts.size();

    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = pts[i].x.approx();
        ys[i] = pts[i].y.approx();
    }
    const double min_x = *std::min_element(xs.begin(), xs.end());
    const double max_x = *std::max_element(xs.begin(), xs.end());
    const double min_y = *std::min_element(ys.begin(), ys.end());
    const double max_y = *std::max_element(ys.begin(), ys.end());
    const double span_x = std::max(max_x - min_x, 1e-9);
    const double span_y = std::max(max_y - min_y, 1e-9);
    const Mapper m{min_x, min_y, (kWidth - 2 * kMargin) / span_x, (kHeight - 2 * kMargin) / span_y};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "<rect class=\"bg\" x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" fill=\"white\"/>\n";

    // Chord endpoints in screen space; x1 < xn, so the chord is never
    // vertical on screen either.
    const double cx1 = m.X(xs.front());
    const double cy1 = m.Y(ys.front());
    const double cx2 = m.X(xs.back());
    const double cy2 = m.Y(ys.back());
    const double slope = (cy2 - cy1) / (cx2 - cx1);
    const double y_at_0 = cy1 - cx1 * slope;
    const double y_at_w = cy1 + (kWidth - cx1) * slope;

    const bool below = verdict.kind == VerdictKind::ConvexBelowChord;
    const bool above = verdict.kind == VerdictKind::ConvexAboveChord;
    if (below || above) {
        // Data-space "below" is toward the bottom of the screen.
        const double rail = below ? kHeight : 0.0;
        svg += "<polygon class=\"halfspace\" data-side=\"";
        svg += below ? "below" : "above";
        svg += "\" points=\"0," + num(y_at_0) + " " + num(kWidth) + "," + num(y_at_w) + " " +
               num(kWidth) + "," + num(rail) + " 0," + num(rail) +
               "\" fill=\"#9ecae1\" fill-opacity=\"0.35\"/>\n";
    }

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        svg += "<line class=\"edge\" x1=\"" + num(m.X(xs[i])) + "\" y1=\"" + num(m.Y(ys[i])) +
               "\" x2=\"" + num(m.X(xs[j])) + "\" y2=\"" + num(m.Y(ys[j])) +
               "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
    }

    svg += "<line class=\"chord\" x1=\"" + num(cx1) + "\" y1=\"" + num(cy1) + "\" x2=\"" + num(cx2) +
           "\" y2=\"" + num(cy2) +
           "\" stroke=\"#1f63a8\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";

    if (verdict.kind == VerdictKind::NotConvex && verdict.witness) {
        const std::size_t w = *verdict.witness - 1;  // witness is 1-based
        svg += "<circle class=\"witness\" cx=\"" + num(m.X(xs[w])) + "\" cy=\"" + num(m.Y(ys[w])) +
               "\" r=\"8\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }

    for (std::size_t i = 0; i < n; ++i) {
        svg += "<circle class=\"vertex\" cx=\"" + num(m.X(xs[i])) + "\" cy=\"" + num(m.Y(ys[i])) +
               "\" r=\"3\" fill=\"#000000\"/>\n";
        svg += "<text class=\"label\" x=\"" + num(m.X(xs[i]) + 6) + "\" y=\"" +
               num(m.Y(ys[i]) - 6) + "\" font-size=\"12\" font-family=\"sans-serif\">P" +
               std::to_string(i + 1) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace cvx
