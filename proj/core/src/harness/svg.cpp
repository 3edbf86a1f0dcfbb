#include "sffkit/harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace sffkit::harness {
namespace {

constexpr double kPanelW = 460, kPanelH = 340;
constexpr double kLeft = 70, kRight = 20, kTop = 36, kBottom = 50;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string tick_label(double x, double step) {
  if (std::abs(x) <= 1e-9 * step) x = 0.0;  // also clears -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else o += c;
  }
  return o;
}

double nice_step(double span) {
  const double raw = span / 5.0;
  const double p = std::pow(10.0, std::floor(std::log10(raw)));
  const double m = raw / p;
  return (m < 1.5 ? 1 : m < 3.5 ? 2 : m < 7.5 ? 5 : 10) * p;
}

void render_panel(std::ostringstream& os, const Panel& p, double ox, double oy) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  auto ty = [&](double y) { return p.log_y ? std::log10(y) : y; };
  for (const auto& s : p.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double e = i < s.err.size() && std::isfinite(s.err[i]) ? s.err[i] : 0.0;
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (p.log_y && s.y[i] <= 0) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      const double lo = p.log_y ? s.y[i] : s.y[i] - e;
      ymin = std::min(ymin, ty(lo));
      ymax = std::max(ymax, ty(s.y[i] + e));
    }
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  const double w = kPanelW - kLeft - kRight, h = kPanelH - kTop - kBottom;
  auto sx = [&](double x) { return ox + kLeft + (x - xmin) / (xmax - xmin) * w; };
  auto sy = [&](double y) { return oy + kTop + (1.0 - (ty(y) - ymin) / (ymax - ymin)) * h; };
  auto syt = [&](double v) { return oy + kTop + (1.0 - (v - ymin) / (ymax - ymin)) * h; };

  os << "<rect x=\"" << num(ox + kLeft) << "\" y=\"" << num(oy + kTop) << "\" width=\"" << num(w) << "\" height=\""
     << num(h) << "\" fill=\"none\" stroke=\"#333\"/>\n";
  os << "<text x=\"" << num(ox + kLeft + w / 2) << "\" y=\"" << num(oy + 22)
     << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(p.title) << "</text>\n";
  os << "<text x=\"" << num(ox + kLeft + w / 2) << "\" y=\"" << num(oy + kPanelH - 10)
     << "\" text-anchor=\"middle\" font-size=\"12\">" << escape(p.xlabel) << "</text>\n";
  os << "<text transform=\"translate(" << num(ox + 16) << "," << num(oy + kTop + h / 2)
     << ") rotate(-90)\" text-anchor=\"middle\" font-size=\"12\">" << escape(p.ylabel) << "</text>\n";

  const double xs = nice_step(xmax - xmin);
  for (double x = std::ceil(xmin / xs) * xs; x <= xmax + 1e-12; x += xs) {
    os << "<line x1=\"" << num(sx(x)) << "\" y1=\"" << num(oy + kTop + h) << "\" x2=\"" << num(sx(x)) << "\" y2=\""
       << num(oy + kTop + h + 5) << "\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << num(sx(x)) << "\" y=\"" << num(oy + kTop + h + 18)
       << "\" text-anchor=\"middle\" font-size=\"10\">" << tick_label(x, xs) << "</text>\n";
  }
  const double ys = nice_step(ymax - ymin);
  for (double v = std::ceil(ymin / ys) * ys; v <= ymax + 1e-12; v += ys) {
    os << "<line x1=\"" << num(ox + kLeft - 5) << "\" y1=\"" << num(syt(v)) << "\" x2=\"" << num(ox + kLeft)
       << "\" y2=\"" << num(syt(v)) << "\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << num(ox + kLeft - 8) << "\" y=\"" << num(syt(v) + 3)
       << "\" text-anchor=\"end\" font-size=\"10\">" << tick_label(p.log_y ? std::pow(10.0, v) : v, p.log_y ? 0.0 : ys) << "</text>\n";
  }

  double ly = oy + kTop + 14;
  for (const auto& s : p.series) {
    if (s.markers) {
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.y[i]) || (p.log_y && s.y[i] <= 0)) continue;
        const double e = i < s.err.size() && std::isfinite(s.err[i]) ? s.err[i] : 0.0;
        if (e > 0 && !p.log_y) {
          os << "<line x1=\"" << num(sx(s.x[i])) << "\" y1=\"" << num(sy(s.y[i] - e)) << "\" x2=\""
             << num(sx(s.x[i])) << "\" y2=\"" << num(sy(s.y[i] + e)) << "\" stroke=\"" << s.color << "\"/>\n";
        }
        os << "<circle cx=\"" << num(sx(s.x[i])) << "\" cy=\"" << num(sy(s.y[i])) << "\" r=\"2.5\" fill=\""
           << s.color << "\"/>\n";
      }
    } else {
      os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
      if (s.dashed) os << " stroke-dasharray=\"6,4\"";
      os << " points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.y[i]) || (p.log_y && s.y[i] <= 0)) continue;
        os << num(sx(s.x[i])) << "," << num(sy(s.y[i])) << " ";
      }
      os << "\"/>\n";
    }
    os << "<text x=\"" << num(ox + kLeft + w - 6) << "\" y=\"" << num(ly) << "\" text-anchor=\"end\" font-size=\"11\" fill=\""
       << s.color << "\">" << escape(s.label) << "</text>\n";
    ly += 14;
  }
}

}  // namespace

std::string render_svg(const std::vector<Panel>& panels, int columns) {
  columns = std::max(1, std::min<int>(columns, static_cast<int>(panels.size())));
  const int rows = (static_cast<int>(panels.size()) + columns - 1) / columns;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(columns * kPanelW) << "\" height=\""
     << num(std::max(1, rows) * kPanelH) << "\" font-family=\"sans-serif\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const double ox = static_cast<double>(i % columns) * kPanelW;
    const double oy = static_cast<double>(i / columns) * kPanelH;
    render_panel(os, panels[i], ox, oy);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sffkit::harness
