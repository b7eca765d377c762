#pragma once

// Deterministic text output: numbers and self-contained SVG.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spiralbox/geometry.hpp"

namespace spiralbox::io {

/// 10 significant digits, shortest form, '.' decimal separator regardless of
/// the global locale.
std::string format_number(double value);

/// Rounds to the value format_number would print.
double round_significant(double value);

/// Quotes a text field when it holds a comma, quote or line break.
std::string csv_field(std::string_view text);

/// Joins formatted values with commas.
std::string csv_row(std::span<const double> values);

struct Series {
  std::string label;
  std::vector<geometry::Vec2> points;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool equal_aspect = false;
  int width = 640;
  int height = 640;
};

/// Line plot; each series becomes one polyline, decimated to at most 5000
/// points.
std::string render_line_plot(std::span<const Series> series,
                             const PlotOptions& options);

struct BarGroup {
  std::string label;
  std::vector<double> values;  // NaN for a missing bar
};

std::string render_bar_chart(std::span<const BarGroup> groups,
                             std::span<const std::string> legend,
                             const PlotOptions& options);

}  // namespace spiralbox::io
