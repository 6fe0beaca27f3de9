#include "gion/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gion {

namespace {

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// Round tick spacing to 1, 2, or 5 times a power of ten.
double nice_step(double range, int target_ticks) {
  const double raw = range / std::max(target_ticks, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double factor = 10;
  if (norm <= 1) {
    factor = 1;
  } else if (norm <= 2) {
    factor = 2;
  } else if (norm <= 5) {
    factor = 5;
  }
  return factor * mag;
}

std::vector<double> ticks(double lo, double hi, int target) {
  const double step = nice_step(hi - lo, target);
  std::vector<double> out;
  double v = std::ceil(lo / step) * step;
  for (; v <= hi + 1e-9 * (hi - lo); v += step) {
    // snap values that are zero up to rounding
    out.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
  }
  return out;
}

}  // namespace

std::string render_line_plot(
    const std::vector<std::pair<double, double>>& points,
    const PlotLayout& layout) {
  if (points.size() < 2) {
    throw std::invalid_argument("render_line_plot: need at least two points");
  }
  double xmin = points.front().first, xmax = xmin;
  double ymin = points.front().second, ymax = ymin;
  for (const auto& [x, y] : points) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (xmax == xmin) {
    xmax = xmin + 1;
  }
  if (ymax == ymin) {
    ymax = ymin + 1;
  }

  const double left = 72, right = 24, top = 48, bottom = 56;
  const double plot_w = layout.width - left - right;
  const double plot_h = layout.height - top - bottom;
  const auto sx = [&](double x) {
    return left + (x - xmin) / (xmax - xmin) * plot_w;
  };
  const auto sy = [&](double y) {
    return top + plot_h - (y - ymin) / (ymax - ymin) * plot_h;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << layout.width << "\" height=\"" << layout.height << "\" viewBox=\"0 0 "
      << layout.width << " " << layout.height << "\">\n"
      << "<rect width=\"" << layout.width << "\" height=\"" << layout.height
      << "\" fill=\"white\"/>\n";

  if (!layout.title.empty()) {
    svg << "<text x=\"" << coord(layout.width / 2.0)
        << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">"
        << xml_escape(layout.title) << "</text>\n";
  }

  for (const double tx : ticks(xmin, xmax, 6)) {
    const double px = sx(tx);
    svg << "<line x1=\"" << coord(px) << "\" y1=\"" << coord(top) << "\" x2=\""
        << coord(px) << "\" y2=\"" << coord(top + plot_h)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n"
        << "<text x=\"" << coord(px) << "\" y=\"" << coord(top + plot_h + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << tick_label(tx) << "</text>\n";
  }
  for (const double ty : ticks(ymin, ymax, 6)) {
    const double py = sy(ty);
    svg << "<line x1=\"" << coord(left) << "\" y1=\"" << coord(py)
        << "\" x2=\"" << coord(left + plot_w) << "\" y2=\"" << coord(py)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n"
        << "<text x=\"" << coord(left - 6) << "\" y=\"" << coord(py + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << tick_label(ty) << "</text>\n";
  }

  svg << "<rect x=\"" << coord(left) << "\" y=\"" << coord(top)
      << "\" width=\"" << coord(plot_w) << "\" height=\"" << coord(plot_h)
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  svg << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" "
         "points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != 0) {
      svg << " ";
    }
    svg << coord(sx(points[i].first)) << "," << coord(sy(points[i].second));
  }
  svg << "\"/>\n";

  if (!layout.x_label.empty()) {
    svg << "<text x=\"" << coord(left + plot_w / 2) << "\" y=\""
        << coord(layout.height - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">"
        << xml_escape(layout.x_label) << "</text>\n";
  }
  if (!layout.y_label.empty()) {
    svg << "<text x=\"18\" y=\"" << coord(top + plot_h / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 18 "
        << coord(top + plot_h / 2) << ")\">" << xml_escape(layout.y_label)
        << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gion
