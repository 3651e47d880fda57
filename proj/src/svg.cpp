#include "chfif/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

namespace chfif {

namespace {

std::string num(double v, const char* fmt = "%.3f") {
    char buf[48];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

const std::vector<double>& values_of(const SampledFunction& s, Component c) {
    return c == Component::f1 ? s.f1_values : s.f2_values;
}

}  // namespace

void emit_svg(const SampledFunction& pre, const SampledFunction* post,
              const std::filesystem::path& path, Component component, int width, int height) {
    if (pre.size() == 0 || (post && post->size() == 0)) {
        raise(Errc::too_few_points, "refusing to render an empty sample");
    }
    if (post) {
        const double span = pre.grid.back() - pre.grid.front();
        if (std::abs(post->grid.front() - pre.grid.front()) > 1e-9 * span ||
            std::abs(post->grid.back() - pre.grid.back()) > 1e-9 * span) {
            raise(Errc::range_mismatch, "pre and post samples do not share an x-range");
        }
    }

    double x_lo = pre.grid.front(), x_hi = pre.grid.back();
    const std::vector<double>& vp = values_of(pre, component);
    double v_lo = *std::min_element(vp.begin(), vp.end());
    double v_hi = *std::max_element(vp.begin(), vp.end());
    if (post) {
        const std::vector<double>& vq = values_of(*post, component);
        v_lo = std::min(v_lo, *std::min_element(vq.begin(), vq.end()));
        v_hi = std::max(v_hi, *std::max_element(vq.begin(), vq.end()));
    }
    const double x_margin = 0.05 * (x_hi - x_lo);
    double v_span = v_hi - v_lo;
    if (v_span <= 0.0) v_span = 1.0;  // flat curve still renders
    const double v_margin = 0.05 * v_span;
    x_lo -= x_margin;
    x_hi += x_margin;
    v_lo -= v_margin;
    v_hi += v_margin;

    const double plot_left = 60.0, plot_right = static_cast<double>(width) - 20.0;
    const double plot_top = 20.0, plot_bottom = static_cast<double>(height) - 40.0;
    auto to_px = [&](double x) {
        return plot_left + (x - x_lo) / (x_hi - x_lo) * (plot_right - plot_left);
    };
    auto to_py = [&](double v) {
        return plot_bottom - (v - v_lo) / (v_hi - v_lo) * (plot_bottom - plot_top);
    };

    auto polyline = [&](const SampledFunction& s, const char* color) {
        std::string pts;
        pts.reserve(s.size() * 14);
        const std::vector<double>& vals = values_of(s, component);
        for (std::size_t i = 0; i < s.size(); ++i) {
            pts += num(to_px(s.grid[i]));
            pts += ',';
            pts += num(to_py(vals[i]));
            pts += ' ';
        }
        if (!pts.empty()) pts.pop_back();
        return "  <polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1\" points=\"" + pts + "\"/>\n";
    };

    const char* value_label = component == Component::f1 ? "f1(x)" : "f2(x)";
    std::string doc;
    doc += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    doc += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\">\n";
    doc += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    doc += "  <line x1=\"" + num(plot_left) + "\" y1=\"" + num(plot_bottom) + "\" x2=\"" +
           num(plot_right) + "\" y2=\"" + num(plot_bottom) +
           "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    doc += "  <line x1=\"" + num(plot_left) + "\" y1=\"" + num(plot_top) + "\" x2=\"" +
           num(plot_left) + "\" y2=\"" + num(plot_bottom) +
           "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    doc += "  <text x=\"" + num(plot_left) + "\" y=\"" + num(plot_bottom + 16.0) +
           "\" font-size=\"12\">" + num(x_lo, "%.6g") + "</text>\n";
    doc += "  <text x=\"" + num(plot_right - 40.0) + "\" y=\"" + num(plot_bottom + 16.0) +
           "\" font-size=\"12\">" + num(x_hi, "%.6g") + "</text>\n";
    doc += "  <text x=\"8\" y=\"" + num(plot_bottom) + "\" font-size=\"12\">" +
           num(v_lo, "%.6g") + "</text>\n";
    doc += "  <text x=\"8\" y=\"" + num(plot_top + 10.0) + "\" font-size=\"12\">" +
           num(v_hi, "%.6g") + "</text>\n";
    doc += "  <text x=\"" + num((plot_left + plot_right) / 2.0) + "\" y=\"" +
           num(plot_bottom + 30.0) + "\" font-size=\"12\">x</text>\n";
    doc += "  <text x=\"8\" y=\"" + num((plot_top + plot_bottom) / 2.0) +
           "\" font-size=\"12\">" + value_label + "</text>\n";
    doc += polyline(pre, "#0000ff");
    if (post) doc += polyline(*post, "#000000");
    doc += "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::io_failure, "cannot open " + path.string() + " for writing");
    out << doc;
    if (!out.flush()) raise(Errc::io_failure, "write to " + path.string() + " failed");
}

}  // namespace chfif
