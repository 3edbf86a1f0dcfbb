#pragma once

#include <string>
#include <vector>

namespace sffkit::harness {

struct Series {
  std::string label;
  std::vector<double> x, y, err;
  std::string color = "#1f77b4";
  bool dashed = false;
  bool markers = false;
};

struct Panel {
  std::string title, xlabel, ylabel;
  bool log_y = false;
  std::vector<Series> series;
};

std::string render_svg(const std::vector<Panel>& panels, int columns = 2);

}  // namespace sffkit::harness
