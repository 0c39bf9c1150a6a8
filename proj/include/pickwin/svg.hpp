#pragma once

// Performance-curve figure: cumulative exits against portfolio size.

#include <algorithm>
#include <cstdio>
#include <span>
#include <string>

#include "pickwin/portfolio.hpp"

namespace pickwin::svg {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string performance_curve_svg(std::span<const CurvePoint> curve, const std::string& title = "") {
  const double w = 480, h = 360, left = 56, right = 16, top = 32, bottom = 48;
  const double n = curve.empty() ? 1.0 : static_cast<double>(curve.back().size);
  const double ymax = std::max(1.0, n);
  auto px = [&](double size) { return left + (w - left - right) * size / n; };
  auto py = [&](double exits) { return h - bottom - (h - top - bottom) * exits / ymax; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
       "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    s += "<text x=\"" + fmt(w / 2) + "\" y=\"20\" text-anchor=\"middle\">" + title + "</text>\n";
  }
  // Axes and ticks.
  s += "<line x1=\"" + fmt(left) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" + fmt(px(n)) + "\" y2=\"" + fmt(py(0)) +
       "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + fmt(left) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" + fmt(left) + "\" y2=\"" + fmt(py(ymax)) +
       "\" stroke=\"black\"/>\n";
  const int step = std::max(1, static_cast<int>(n) / 10);
  for (int i = 0; i <= static_cast<int>(n); i += step) {
    s += "<text x=\"" + fmt(px(i)) + "\" y=\"" + fmt(py(0) + 16) + "\" text-anchor=\"middle\">" +
         std::to_string(i) + "</text>\n";
    s += "<text x=\"" + fmt(left - 6) + "\" y=\"" + fmt(py(i) + 4) + "\" text-anchor=\"end\">" + std::to_string(i) +
         "</text>\n";
  }
  s += "<text x=\"" + fmt((left + w - right) / 2) + "\" y=\"" + fmt(h - 12) +
       "\" text-anchor=\"middle\">Portfolio size</text>\n";
  s += "<text transform=\"translate(16," + fmt((top + h - bottom) / 2) +
       ") rotate(-90)\" text-anchor=\"middle\">Companies that exit</text>\n";

  // Reference lines.
  const double frac = curve.empty() ? 0.0 : curve.back().random_baseline / n;
  s += "<line x1=\"" + fmt(px(0)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" + fmt(px(n)) + "\" y2=\"" + fmt(py(n)) +
       "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
  s += "<line x1=\"" + fmt(px(0)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" + fmt(px(n)) + "\" y2=\"" +
       fmt(py(n * frac)) + "\" stroke=\"firebrick\" stroke-dasharray=\"2,3\"/>\n";

  // Step curve.
  std::string pts = fmt(px(0)) + "," + fmt(py(0));
  int prev = 0;
  for (const auto& p : curve) {
    pts += " " + fmt(px(p.size - 1)) + "," + fmt(py(prev));
    pts += " " + fmt(px(p.size - 1)) + "," + fmt(py(p.exits));
    pts += " " + fmt(px(p.size)) + "," + fmt(py(p.exits));
    prev = p.exits;
  }
  s += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";

  // Legend.
  const double lx = left + 12, ly = top + 8;
  s += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(lx + 20) + "\" y2=\"" + fmt(ly) +
       "\" stroke=\"steelblue\" stroke-width=\"2\"/><text x=\"" + fmt(lx + 26) + "\" y=\"" + fmt(ly + 4) +
       "\">Portfolio</text>\n";
  s += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly + 16) + "\" x2=\"" + fmt(lx + 20) + "\" y2=\"" + fmt(ly + 16) +
       "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/><text x=\"" + fmt(lx + 26) + "\" y=\"" + fmt(ly + 20) +
       "\">Perfect</text>\n";
  s += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly + 32) + "\" x2=\"" + fmt(lx + 20) + "\" y2=\"" + fmt(ly + 32) +
       "\" stroke=\"firebrick\" stroke-dasharray=\"2,3\"/><text x=\"" + fmt(lx + 26) + "\" y=\"" + fmt(ly + 36) +
       "\">Random</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace pickwin::svg
