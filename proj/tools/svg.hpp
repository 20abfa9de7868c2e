#pragma once

#include <string>
#include <vector>

namespace curvhv::cli {

struct SvgSeries {
  std::string label;
  std::vector<double> x, y;
  bool markers = false;  // points instead of a polyline
};

struct SvgPlot {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  std::vector<SvgSeries> series;
  bool equal_axes = false;
};

// Static vector plot with axes, ticks and a legend.
std::string render_svg(const SvgPlot& plot, int width = 640, int height = 480);

}  // namespace curvhv::cli
