#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gion {

struct PlotLayout {
  int width = 720;
  int height = 480;
  std::string title;
  std::string x_label;
  std::string y_label;
};

/// Renders a single polyline with framed axes, ticks, and labels as a
/// standalone SVG document. Coordinates are emitted with fixed precision so
/// identical inputs produce identical bytes. Requires at least two points.
std::string render_line_plot(const std::vector<std::pair<double, double>>& points,
                             const PlotLayout& layout);

}  // namespace gion
