#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "casimir/errors.hpp"

// Dependency-free SVG 1.1 line charts: enough for force-vs-distance and
// ratio-vs-distance curves. Charts stack vertically in one document.

namespace casimir {

struct SvgSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct SvgAxis {
    std::string label;
    bool log = false;
};

struct LineChart {
    std::string title;
    SvgAxis x;
    SvgAxis y;
    std::vector<SvgSeries> series;
};

namespace detail {

inline const char* svg_palette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#8c564b"};

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct AxisScale {
    double lo = 0.0, hi = 1.0;
    bool log = false;
    double px0 = 0.0, px1 = 1.0; // pixel range

    double to_px(double v) const {
        double u = log ? std::log10(v) : v;
        double ulo = log ? std::log10(lo) : lo;
        double uhi = log ? std::log10(hi) : hi;
        if (uhi == ulo) return 0.5 * (px0 + px1);
        return px0 + (u - ulo) / (uhi - ulo) * (px1 - px0);
    }

    bool valid(double v) const { return std::isfinite(v) && (!log || v > 0.0); }
};

inline void fit(AxisScale& s, double lo, double hi) {
    if (!(lo < hi)) {
        lo = lo - 0.5;
        hi = hi + 0.5;
    }
    if (s.log) {
        s.lo = std::pow(10.0, std::floor(std::log10(lo)));
        s.hi = std::pow(10.0, std::ceil(std::log10(hi)));
        if (s.lo == s.hi) s.hi *= 10.0;
    } else {
        const double pad = 0.05 * (hi - lo);
        s.lo = lo - pad;
        s.hi = hi + pad;
    }
}

inline std::vector<double> ticks(const AxisScale& s, int target = 6) {
    std::vector<double> out;
    if (s.log) {
        const int klo = static_cast<int>(std::ceil(std::log10(s.lo) - 1e-9));
        const int khi = static_cast<int>(std::floor(std::log10(s.hi) + 1e-9));
        int stride = std::max(1, (khi - klo) / std::max(1, target));
        for (int k = klo; k <= khi; k += stride) out.push_back(std::pow(10.0, k));
    } else {
        const double span = s.hi - s.lo;
        const double raw = span / target;
        const double mag = std::pow(10.0, std::floor(std::log10(raw)));
        double step = mag;
        for (double m : {1.0, 2.0, 5.0, 10.0})
            if (raw <= m * mag) {
                step = m * mag;
                break;
            }
        double v = std::ceil(s.lo / step) * step;
        for (; v <= s.hi + 1e-12 * span; v += step) out.push_back(v);
    }
    return out;
}

inline void render_chart(std::ostream& os, const LineChart& chart, double top, double width,
                         double height) {
    const double ml = 80, mr = 24, mt = 40, mb = 52;
    AxisScale xs, ys;
    xs.log = chart.x.log;
    ys.log = chart.y.log;
    xs.px0 = ml;
    xs.px1 = width - mr;
    ys.px0 = top + height - mb; // y axis grows upward
    ys.px1 = top + mt;

    double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    bool any = false;
    for (const SvgSeries& s : chart.series)
        for (const auto& [px, py] : s.points) {
            if (!xs.valid(px) || !ys.valid(py)) continue;
            if (!any) {
                xlo = xhi = px;
                ylo = yhi = py;
                any = true;
            }
            xlo = std::min(xlo, px);
            xhi = std::max(xhi, px);
            ylo = std::min(ylo, py);
            yhi = std::max(yhi, py);
        }
    if (!any) {
        xlo = ylo = xs.log ? 1.0 : 0.0;
        xhi = yhi = xs.log ? 10.0 : 1.0;
    }
    fit(xs, xlo, xhi);
    fit(ys, ylo, yhi);

    os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<text x=\"" << svg_num(0.5 * width) << "\" y=\"" << svg_num(top + 18)
       << "\" text-anchor=\"middle\" font-size=\"14\">" << chart.title << "</text>\n";

    // frame
    os << "<rect x=\"" << svg_num(ml) << "\" y=\"" << svg_num(top + mt) << "\" width=\""
       << svg_num(width - ml - mr) << "\" height=\"" << svg_num(height - mt - mb)
       << "\" fill=\"none\" stroke=\"#333333\"/>\n";

    for (double t : ticks(xs)) {
        const double px = xs.to_px(t);
        os << "<line x1=\"" << svg_num(px) << "\" y1=\"" << svg_num(ys.px0) << "\" x2=\""
           << svg_num(px) << "\" y2=\"" << svg_num(ys.px0 + 5) << "\" stroke=\"#333333\"/>\n";
        os << "<text x=\"" << svg_num(px) << "\" y=\"" << svg_num(ys.px0 + 18)
           << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    }
    for (double t : ticks(ys)) {
        const double py = ys.to_px(t);
        os << "<line x1=\"" << svg_num(ml - 5) << "\" y1=\"" << svg_num(py) << "\" x2=\""
           << svg_num(ml) << "\" y2=\"" << svg_num(py) << "\" stroke=\"#333333\"/>\n";
        os << "<text x=\"" << svg_num(ml - 8) << "\" y=\"" << svg_num(py + 4)
           << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
    }
    os << "<text x=\"" << svg_num(0.5 * width) << "\" y=\"" << svg_num(top + height - 12)
       << "\" text-anchor=\"middle\">" << chart.x.label << "</text>\n";
    os << "<text x=\"18\" y=\"" << svg_num(top + 0.5 * height)
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << svg_num(top + 0.5 * height)
       << ")\">" << chart.y.label << "</text>\n";

    for (std::size_t si = 0; si < chart.series.size(); ++si) {
        const SvgSeries& s = chart.series[si];
        const char* colour = svg_palette[si % 6];
        std::string pts;
        auto flush = [&] {
            if (!pts.empty())
                os << "<polyline points=\"" << pts << "\" fill=\"none\" stroke=\"" << colour
                   << "\" stroke-width=\"1.5\"/>\n";
            pts.clear();
        };
        for (const auto& [px, py] : s.points) {
            if (!xs.valid(px) || !ys.valid(py)) {
                flush();
                continue;
            }
            if (!pts.empty()) pts += ' ';
            pts += svg_num(xs.to_px(px));
            pts += ',';
            pts += svg_num(ys.to_px(py));
        }
        flush();
        // legend entry
        const double ly = top + mt + 16 + 16 * static_cast<double>(si);
        os << "<line x1=\"" << svg_num(width - mr - 150) << "\" y1=\"" << svg_num(ly - 4)
           << "\" x2=\"" << svg_num(width - mr - 126) << "\" y2=\"" << svg_num(ly - 4)
           << "\" stroke=\"" << colour << "\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << svg_num(width - mr - 120) << "\" y=\"" << svg_num(ly) << "\">"
           << s.name << "</text>\n";
    }
    os << "</g>\n";
}

} // namespace detail

/// Write the charts stacked vertically into one SVG 1.1 document.
inline void write_svg(std::ostream& os, const std::vector<LineChart>& charts, int width = 880,
                      int panel_height = 440) {
    const int total_height = panel_height * std::max<std::size_t>(1, charts.size());
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg version=\"1.1\" xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << total_height << "\" viewBox=\"0 0 " << width << " " << total_height
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < charts.size(); ++i)
        detail::render_chart(os, charts[i], static_cast<double>(panel_height) * i, width,
                             panel_height);
    os << "</svg>\n";
    if (!os) throw IoError("failed while writing SVG");
}

} // namespace casimir
