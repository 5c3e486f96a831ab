#pragma once

// Minimal self-contained SVG plots.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

namespace zollgeo::svg {

struct Series {
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool markers = false;
};

struct Frame {
  double width = 640, height = 420;
  double left = 70, right = 20, top = 40, bottom = 50;
};

namespace detail {

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string header(const Frame& f, const std::string& title) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">{}</text>\n",
      f.width, f.height, f.width, f.height, f.width / 2, escape(title));
}

}  // namespace detail

/// Line/marker plot with labelled axis extents.
inline std::string line_plot(const std::string& title, const std::string& xlabel,
                             const std::string& ylabel, const std::vector<Series>& series,
                             const Frame& f = {}) {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : series) {
    for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
    for (double v : s.y) {
      if (!std::isfinite(v)) continue;
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!(xmax > xmin)) { xmin -= 0.5; xmax += 0.5; }
  // flat data still gets a visible band
  if (!(ymax - ymin > 1e-9 * std::max(1.0, std::abs(ymax)))) {
    const double pad = std::max(1e-3, 0.05 * std::abs(ymax));
    ymin -= pad;
    ymax += pad;
  }
  const double pw = f.width - f.left - f.right, ph = f.height - f.top - f.bottom;
  auto px = [&](double x) { return f.left + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return f.top + (ymax - y) / (ymax - ymin) * ph; };

  std::string out = detail::header(f, title);
  out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                     f.left, f.top, pw, ph);
  out += fmt::format(
      "<g font-family=\"sans-serif\" font-size=\"11\">\n"
      "<text x=\"{}\" y=\"{}\" text-anchor=\"start\">{:.4g}</text>\n"
      "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{:.4g}</text>\n"
      "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{:.6g}</text>\n"
      "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{:.6g}</text>\n"
      "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n"
      "<text x=\"14\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 14 {})\">{}</text>\n</g>\n",
      f.left, f.height - f.bottom + 16, xmin, f.width - f.right, f.height - f.bottom + 16, xmax,
      f.left - 4, f.height - f.bottom, ymin, f.left - 4, f.top + 10, ymax, f.left + pw / 2,
      f.height - 12, detail::escape(xlabel), f.top + ph / 2, f.top + ph / 2, detail::escape(ylabel));
  for (const auto& s : series) {
    if (s.markers) {
      for (std::size_t i = 0; i < s.x.size(); ++i)
        if (std::isfinite(s.y[i]))
          out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.5\" fill=\"{}\"/>\n", px(s.x[i]),
                             py(s.y[i]), s.color);
    } else {
      out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i)
        if (std::isfinite(s.y[i])) out += fmt::format("{:.2f},{:.2f} ", px(s.x[i]), py(s.y[i]));
      out += "\"/>\n";
    }
  }
  return out + "</svg>\n";
}

struct Curve {
  std::vector<std::pair<double, double>> points;  // unit-disk coordinates
  std::string color = "#1f77b4";
  bool dashed = false;
};

/// Curves on the unit disk (an orthographic view of the sphere) with highlighted points.
inline std::string disk_trace(const std::string& title, const std::vector<Curve>& curves,
                              const std::vector<std::pair<double, double>>& marks) {
  const Frame f{520, 540, 20, 20, 40, 20};
  const double cx = f.width / 2, cy = f.top + 240, rad = 230;
  std::string out = detail::header(f, title);
  out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#f4f4f4\" stroke=\"black\"/>\n", cx, cy, rad);
  for (const auto& c : curves) {
    if (c.points.size() < 2) continue;
    out += "<polyline fill=\"none\" stroke=\"" + c.color + "\" stroke-width=\"1.2\"";
    if (c.dashed) out += " stroke-dasharray=\"4 3\"";
    out += " points=\"";
    for (const auto& [x, y] : c.points) out += fmt::format("{:.2f},{:.2f} ", cx + rad * x, cy - rad * y);
    out += "\"/>\n";
  }
  for (const auto& [x, y] : marks)
    out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"4\" fill=\"#d62728\"/>\n", cx + rad * x,
                       cy - rad * y);
  return out + "</svg>\n";
}

/// Arrows from base points to displaced points; (x, y) in data units.
inline std::string arrow_field(const std::string& title, const std::string& xlabel,
                               const std::string& ylabel,
                               const std::vector<std::pair<double, double>>& base,
                               const std::vector<std::pair<double, double>>& tip, double xmax,
                               double ymax) {
  const Frame f;
  const double pw = f.width - f.left - f.right, ph = f.height - f.top - f.bottom;
  auto px = [&](double x) { return f.left + x / xmax * pw; };
  auto py = [&](double y) { return f.top + (ymax - y) / ymax * ph; };
  std::string out = detail::header(f, title);
  out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                     f.left, f.top, pw, ph);
  out += fmt::format(
      "<g font-family=\"sans-serif\" font-size=\"11\"><text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>"
      "<text x=\"14\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 14 {})\">{}</text></g>\n",
      f.left + pw / 2, f.height - 12, detail::escape(xlabel), f.top + ph / 2, f.top + ph / 2,
      detail::escape(ylabel));
  for (std::size_t i = 0; i < base.size(); ++i) {
    out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2\" fill=\"black\"/>\n", px(base[i].first),
                       py(base[i].second));
    out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#d62728\"/>\n",
                       px(base[i].first), py(base[i].second), px(tip[i].first), py(tip[i].second));
  }
  return out + "</svg>\n";
}

}  // namespace zollgeo::svg
