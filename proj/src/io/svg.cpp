#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "spiralbox/io.hpp"

namespace spiralbox::io {

namespace {

constexpr std::size_t kMaxPolylinePoints = 5000;
constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#ff7f0e", "#9467bd", "#8c564b"};

std::string px(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed, 2);
  return std::string(buf.data(), res.ptr);
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

std::string header(const PlotOptions& o) {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                  std::to_string(o.width) + "\" height=\"" + std::to_string(o.height) +
                  "\" viewBox=\"0 0 " + std::to_string(o.width) + " " +
                  std::to_string(o.height) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!o.title.empty()) {
    s += "<text x=\"" + px(o.width / 2.0) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         escape(o.title) + "</text>\n";
  }
  return s;
}

struct Frame {
  double left = 70, right = 20, top = 40, bottom = 50;
};

}  // namespace

std::string render_line_plot(std::span<const Series> series, const PlotOptions& options) {
  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = x_min, y_max = -x_min;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
      x_min = std::min(x_min, p.x);
      x_max = std::max(x_max, p.x);
      y_min = std::min(y_min, p.y);
      y_max = std::max(y_max, p.y);
    }
  }
  if (!(x_min <= x_max)) x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  if (x_max == x_min) x_min -= 0.5, x_max += 0.5;
  if (y_max == y_min) y_min -= 0.5, y_max += 0.5;

  const Frame f;
  const double plot_w = options.width - f.left - f.right;
  const double plot_h = options.height - f.top - f.bottom;
  double sx = plot_w / (x_max - x_min);
  double sy = plot_h / (y_max - y_min);
  if (options.equal_aspect) sx = sy = std::min(sx, sy);
  const double x_off = f.left + 0.5 * (plot_w - sx * (x_max - x_min));
  const double y_off = f.top + 0.5 * (plot_h - sy * (y_max - y_min));
  auto map_x = [&](double x) { return x_off + sx * (x - x_min); };
  auto map_y = [&](double y) { return y_off + sy * (y_max - y); };

  std::string svg = header(options);
  svg += "<rect x=\"" + px(f.left) + "\" y=\"" + px(f.top) + "\" width=\"" + px(plot_w) +
         "\" height=\"" + px(plot_h) + "\" fill=\"none\" stroke=\"#888\"/>\n";
  svg += "<text x=\"" + px(f.left) + "\" y=\"" + px(options.height - 28.0) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(options.x_label) + " [" +
         format_number(x_min) + ", " + format_number(x_max) + "]</text>\n";
  svg += "<text x=\"8\" y=\"" + px(f.top - 8) + "\" font-family=\"sans-serif\" font-size=\"11\">" +
         escape(options.y_label) + " [" + format_number(y_min) + ", " + format_number(y_max) +
         "]</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& pts = series[k].points;
    // spread the n - 1 gaps over at most kMaxPolylinePoints - 1 so the forced
    // final point still fits
    const std::size_t gaps = pts.empty() ? 0 : pts.size() - 1;
    const std::size_t stride =
        std::max<std::size_t>(1, (gaps + kMaxPolylinePoints - 2) / (kMaxPolylinePoints - 1));
    std::string path;
    for (std::size_t i = 0; i < pts.size(); i += stride) {
      if (!path.empty()) path += ' ';
      path += px(map_x(pts[i].x)) + "," + px(map_y(pts[i].y));
    }
    if (!pts.empty() && (pts.size() - 1) % stride != 0) {
      path += ' ' + px(map_x(pts.back().x)) + "," + px(map_y(pts.back().y));
    }
    const char* colour = kPalette[k % kPalette.size()];
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(colour) +
           "\" stroke-width=\"1.2\" points=\"" + path + "\"/>\n";
    if (!series[k].label.empty()) {
      svg += "<text x=\"" + px(options.width - f.right - 150) + "\" y=\"" +
             px(f.top + 16.0 * (k + 1)) + "\" fill=\"" + colour +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(series[k].label) +
             "</text>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_bar_chart(std::span<const BarGroup> groups,
                             std::span<const std::string> legend,
                             const PlotOptions& options) {
  double top_value = 0.0;
  for (const auto& g : groups) {
    for (double v : g.values) {
      if (std::isfinite(v)) top_value = std::max(top_value, v);
    }
  }
  if (top_value <= 0.0) top_value = 1.0;

  const Frame f;
  const double plot_w = options.width - f.left - f.right;
  const double plot_h = options.height - f.top - f.bottom;
  std::string svg = header(options);
  svg += "<line x1=\"" + px(f.left) + "\" y1=\"" + px(f.top + plot_h) + "\" x2=\"" +
         px(f.left + plot_w) + "\" y2=\"" + px(f.top + plot_h) + "\" stroke=\"#444\"/>\n";
  svg += "<text x=\"8\" y=\"" + px(f.top - 8) + "\" font-family=\"sans-serif\" font-size=\"11\">" +
         escape(options.y_label) + " (max " + format_number(top_value) + ")</text>\n";

  const double group_w = groups.empty() ? plot_w : plot_w / groups.size();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& values = groups[g].values;
    const double bar_w = values.empty() ? 0.0 : 0.8 * group_w / values.size();
    for (std::size_t b = 0; b < values.size(); ++b) {
      if (!std::isfinite(values[b])) continue;
      const double h = plot_h * values[b] / top_value;
      const double x = f.left + g * group_w + 0.1 * group_w + b * bar_w;
      svg += "<rect x=\"" + px(x) + "\" y=\"" + px(f.top + plot_h - h) + "\" width=\"" +
             px(bar_w) + "\" height=\"" + px(h) + "\" fill=\"" + kPalette[b % kPalette.size()] +
             "\"><title>" + escape(groups[g].label) + ": " + format_number(values[b]) +
             "</title></rect>\n";
    }
    svg += "<text x=\"" + px(f.left + (g + 0.5) * group_w) + "\" y=\"" +
           px(f.top + plot_h + 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" +
           escape(groups[g].label) + "</text>\n";
  }
  for (std::size_t i = 0; i < legend.size(); ++i) {
    svg += "<text x=\"" + px(options.width - f.right - 150) + "\" y=\"" +
           px(f.top + 16.0 * (i + 1)) + "\" fill=\"" + kPalette[i % kPalette.size()] +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(legend[i]) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace spiralbox::io
