#include "qubitfit/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace qubitfit {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

std::string num(double v, int precision = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s(buf);
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos)
    s.erase(0, 1);
  return s;
}

std::string escape(const std::string& in) {
  std::string out;
  for (char c : in) {
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

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    } else {
      const double m = 0.05 * (hi - lo);
      lo -= m;
      hi += m;
    }
  }
};

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (std::size_t i = 0; i < n; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  if (n > 1) v.back() = hi;
  return v;
}

std::string render_line_plot(const std::vector<PlotSeries>& series,
                             const PlotOptions& options) {
  if (series.empty()) throw std::invalid_argument("plot needs at least one series");
  Range xr, yr;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size() || s.x.empty())
      throw std::invalid_argument("series '" + s.label + "' has mismatched or empty data");
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  if (xr.hi - xr.lo < 1e-12) xr.pad();
  yr.pad();

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    svg += "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"18\">" + escape(options.title) + "</text>\n";
  }

  // axes box
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) +
         "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  const int ticks = std::max(options.ticks, 1);
  svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int i = 0; i <= ticks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / ticks;
    const double px = sx(fx);
    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(kTop + ph) + "\" x2=\"" + num(px) +
           "\" y2=\"" + num(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(kTop + ph + 20) +
           "\" text-anchor=\"middle\">" + num(fx) + "</text>\n";

    const double fy = yr.lo + (yr.hi - yr.lo) * i / ticks;
    const double py = sy(fy);
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(py) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py + 4) +
           "\" text-anchor=\"end\">" + num(fy) + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 20) +
         "\" text-anchor=\"middle\" font-size=\"14\">" + escape(options.x_label) + "</text>\n";
  if (!options.y_label.empty()) {
    svg += "<text x=\"20\" y=\"" + num(kTop + ph / 2) +
           "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 " +
           num(kTop + ph / 2) + ")\">" + escape(options.y_label) + "</text>\n";
  }
  svg += "</g>\n";

  for (const auto& s : series) {
    svg += "<polyline class=\"series\" fill=\"none\" stroke=\"" + escape(s.color) +
           "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) svg += ' ';
      svg += num(sx(s.x[i])) + ',' + num(sy(s.y[i]));
    }
    svg += "\"><title>" + escape(s.label) + "</title></polyline>\n";
  }

  // legend
  svg += "<g font-family=\"sans-serif\" font-size=\"13\">\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double y = kTop + 20 + 20.0 * static_cast<double>(i);
    svg += "<line x1=\"" + num(kLeft + 15) + "\" y1=\"" + num(y) + "\" x2=\"" +
           num(kLeft + 45) + "\" y2=\"" + num(y) + "\" stroke=\"" + escape(series[i].color) +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(kLeft + 52) + "\" y=\"" + num(y + 4) + "\">" +
           escape(series[i].label) + "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace qubitfit
