#include "qcount/experiment.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace qcount::experiment {

namespace {

constexpr double kPanelWidth = 640.0;
constexpr double kPanelHeight = 260.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 45.0;

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    bool log = false;

    double map(double v, double pixel_lo, double pixel_hi) const {
        const double a = log ? std::log10(std::max(v, 1e-300)) : v;
        const double l = log ? std::log10(lo) : lo;
        const double h = log ? std::log10(hi) : hi;
        const double f = h > l ? (a - l) / (h - l) : 0.5;
        return pixel_lo + f * (pixel_hi - pixel_lo);
    }
};

std::string num(double v) { return fmt::format("{:.4g}", v); }

bool is_histogram(const FigureSeries& s) { return s.x_label == "j" || s.x_label == "outcome"; }

void panel(const FigureData& fig, const FigureSeries& series, double top, std::ostream& out) {
    std::vector<const FigurePoint*> pts;
    for (const auto& p : fig.points) {
        if (p.series == series.name) pts.push_back(&p);
    }
    const bool histogram = is_histogram(series);
    const auto value = [&](const FigurePoint& p) { return histogram ? p.probability : p.M_hat; };

    Axis xa;
    Axis ya;
    xa.log = series.x_label == "shots";
    if (!pts.empty()) {
        xa.lo = pts.front()->x;
        xa.hi = pts.front()->x;
        for (const auto* p : pts) {
            xa.lo = std::min(xa.lo, p->x);
            xa.hi = std::max(xa.hi, p->x);
        }
    }
    if (histogram) {
        xa.lo -= 0.5;
        xa.hi += 0.5;
        ya.hi = 1.0;
    } else {
        double ymax = static_cast<double>(fig.true_M);
        for (const auto* p : pts) ymax = std::max(ymax, value(*p));
        ya.hi = ymax > 0.0 ? ymax * 1.15 : 1.0;
    }

    const double x0 = kMarginLeft;
    const double x1 = kPanelWidth - kMarginRight;
    const double y0 = top + kPanelHeight - kMarginBottom;
    const double y1 = top + kMarginTop;

    out << fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"13\">{} ({})</text>\n", x0, top + 18, series.name,
                       fig.title);
    out << fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", x0, y0, x1);
    out << fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", x0, y0, y1);
    out << fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n", (x0 + x1) / 2,
                       y0 + 35, series.x_label);
    out << fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"end\">{}</text>\n", x0 - 6, y0, num(ya.lo));
    out << fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"end\">{}</text>\n", x0 - 6, y1 + 4,
                       num(ya.hi));
    out << fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n", x0, y0 + 16,
                       num(histogram ? xa.lo + 0.5 : xa.lo));
    out << fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n", x1, y0 + 16,
                       num(histogram ? xa.hi - 0.5 : xa.hi));
    out << fmt::format(
        "<text x=\"16\" y=\"{0}\" font-size=\"11\" transform=\"rotate(-90 16 {0})\" text-anchor=\"middle\">{1}</text>\n",
        (y0 + y1) / 2, histogram ? "probability" : "M_hat");

    if (histogram) {
        const double slot = (x1 - x0) / std::max(1.0, xa.hi - xa.lo);
        for (const auto* p : pts) {
            const double cx = xa.map(p->x, x0, x1);
            const double cy = ya.map(value(*p), y0, y1);
            out << fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"steelblue\"/>\n",
                               cx - 0.35 * slot, cy, 0.7 * slot, y0 - cy);
        }
        return;
    }

    const double ref = ya.map(static_cast<double>(fig.true_M), y0, y1);
    out << fmt::format(
        "<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"red\" stroke-dasharray=\"6,4\"/>\n", x0,
        ref, x1);
    std::string poly;
    for (const auto* p : pts) {
        poly += fmt::format("{:.2f},{:.2f} ", xa.map(p->x, x0, x1), ya.map(value(*p), y0, y1));
    }
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"" << poly << "\"/>\n";
    for (const auto* p : pts) {
        out << fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3.5\" fill=\"steelblue\"/>\n",
                           xa.map(p->x, x0, x1), ya.map(value(*p), y0, y1));
    }
}

} // namespace

void write_figure_svg(const FigureData& fig, std::ostream& out) {
    const double height = kPanelHeight * static_cast<double>(std::max<std::size_t>(1, fig.series.size()));
    out << fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
        "font-family=\"sans-serif\">\n",
        kPanelWidth, height);
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < fig.series.size(); ++i) {
        panel(fig, fig.series[i], kPanelHeight * static_cast<double>(i), out);
    }
    out << "</svg>\n";
}

} // namespace qcount::experiment
