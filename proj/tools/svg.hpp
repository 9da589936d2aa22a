#ifndef SPECSHARE_TOOLS_SVG_HPP
#define SPECSHARE_TOOLS_SVG_HPP

// Dependency-free SVG line charts for sweep output. Data-first: the CSV is
// authoritative, these are quick-look plots.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "csv.hpp"

namespace cli {

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

namespace svg_detail {

inline const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                                  "#9467bd", "#ff7f0e", "#8c564b"};

inline void render_chart(std::ofstream& out, const Chart& chart, double y_offset) {
    const double width = 760.0, height = 320.0, left = 70.0, top = y_offset + 40.0;
    const double plot_w = width - left - 30.0, plot_h = height - 80.0;

    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const Series& s : chart.series) {
        for (auto [x, y] : s.points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (!(x_max > x_min)) x_max = x_min + 1.0;
    if (!(y_max > y_min)) y_max = y_min + 1.0;
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return top + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

    out << "<text x=\"" << left << "\" y=\"" << y_offset + 24 << "\" font-size=\"15\" "
        << "font-family=\"sans-serif\">" << chart.title << "</text>\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";

    for (int i = 0; i <= 4; ++i) {
        const double xv = x_min + i * (x_max - x_min) / 4.0;
        const double yv = y_min + i * (y_max - y_min) / 4.0;
        out << "<text x=\"" << px(xv) << "\" y=\"" << top + plot_h + 18
            << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">"
            << fmt(xv) << "</text>\n";
        out << "<text x=\"" << left - 8 << "\" y=\"" << py(yv) + 4
            << "\" font-size=\"11\" text-anchor=\"end\" font-family=\"sans-serif\">"
            << fmt(yv) << "</text>\n";
        out << "<line x1=\"" << left << "\" y1=\"" << py(yv) << "\" x2=\"" << left + plot_w
            << "\" y2=\"" << py(yv) << "\" stroke=\"#ddd\"/>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << top + plot_h + 36
        << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">"
        << chart.x_label << "</text>\n";

    int color = 0;
    double legend_x = left + 10.0;
    for (const Series& s : chart.series) {
        const char* stroke = kPalette[color % 6];
        out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.6\" points=\"";
        for (auto [x, y] : s.points) out << px(x) << "," << py(y) << " ";
        out << "\"/>\n";
        out << "<text x=\"" << legend_x << "\" y=\"" << top + 16 << "\" font-size=\"11\" "
            << "fill=\"" << stroke << "\" font-family=\"sans-serif\">" << s.name << "</text>\n";
        legend_x += 14.0 * (s.name.size() * 0.65 + 2.0);
        ++color;
    }
}

} // namespace svg_detail

inline void write_charts(const std::string& path, const std::vector<Chart>& charts) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open SVG output: " + path);
    const double height = 340.0 * static_cast<double>(charts.size());
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" height=\"" << height
        << "\" viewBox=\"0 0 760 " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    double offset = 0.0;
    for (const Chart& chart : charts) {
        svg_detail::render_chart(out, chart, offset);
        offset += 340.0;
    }
    out << "</svg>\n";
}

} // namespace cli

#endif
