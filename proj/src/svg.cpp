// Copyright 2026 The boosterforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boosterforge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace boosterforge::svg {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 440;
constexpr double kLeft = 80;
constexpr double kRight = 180;  // legend column
constexpr double kTop = 40;
constexpr double kBottom = 60;

std::string escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
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

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi == lo) {
      const double pad = lo == 0.0 ? 1.0 : 0.05 * std::abs(lo);
      lo -= pad;
      hi += pad;
    }
  }
};

bool usable(double y, bool log_y) { return std::isfinite(y) && (!log_y || y > 0.0); }

}  // namespace

std::string render(const LinePlot& plot) {
  Range xr;
  Range yr;
  for (const auto& s : plot.series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !usable(s.y[i], plot.log_y)) continue;
      xr.add(s.x[i]);
      yr.add(plot.log_y ? std::log10(s.y[i]) : s.y[i]);
    }
  }
  for (const auto& h : plot.reference_lines) {
    if (usable(h.y, plot.log_y)) yr.add(plot.log_y ? std::log10(h.y) : h.y);
  }
  xr.finish();
  if (plot.log_y) {
    yr.finish();
    yr.lo = std::floor(yr.lo);
    yr.hi = std::ceil(yr.hi);
    if (yr.hi == yr.lo) yr.hi += 1.0;
  } else {
    yr.finish();
    const double pad = 0.05 * (yr.hi - yr.lo);
    yr.lo -= pad;
    yr.hi += pad;
  }

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  const auto sy = [&](double y) {
    const double v = plot.log_y ? std::log10(y) : y;
    return kTop + ph - (v - yr.lo) / (yr.hi - yr.lo) * ph;
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(plot.title) + "</text>\n";
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) + "\" height=\"" +
         num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double px = sx(xv);
    out += "<line x1=\"" + num(px) + "\" y1=\"" + num(kTop + ph) + "\" x2=\"" + num(px) + "\" y2=\"" +
           num(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(px) + "\" y=\"" + num(kTop + ph + 18) + "\" text-anchor=\"middle\">" +
           tick_label(xv) + "</text>\n";
  }
  const int ydivs = plot.log_y ? static_cast<int>(yr.hi - yr.lo) : kTicks;
  const int ystep = std::max(1, ydivs / 8);
  for (int i = 0; i <= ydivs; i += ystep) {
    const double v = yr.lo + (yr.hi - yr.lo) * i / ydivs;
    const double py = kTop + ph - (v - yr.lo) / (yr.hi - yr.lo) * ph;
    out += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
           num(py) + "\" stroke=\"black\"/>\n";
    const std::string label = plot.log_y ? "1e" + std::to_string(static_cast<int>(std::lround(v)))
                                         : tick_label(v);
    out += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py + 4) + "\" text-anchor=\"end\">" + label +
           "</text>\n";
  }
  out += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 15) +
         "\" text-anchor=\"middle\">" + escape(plot.x_label) + "</text>\n";
  out += "<text transform=\"translate(18," + num(kTop + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + escape(plot.y_label) + "</text>\n";

  double legend_y = kTop + 10;
  const double legend_x = kLeft + pw + 15;
  const auto legend = [&](const std::string& label, const std::string& color, bool dashed) {
    if (label.empty()) return;
    out += "<line x1=\"" + num(legend_x) + "\" y1=\"" + num(legend_y) + "\" x2=\"" + num(legend_x + 24) +
           "\" y2=\"" + num(legend_y) + "\" stroke=\"" + color + "\" stroke-width=\"2\"" +
           (dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
    out += "<text x=\"" + num(legend_x + 30) + "\" y=\"" + num(legend_y + 4) + "\">" + escape(label) +
           "</text>\n";
    legend_y += 18;
  };

  for (const auto& h : plot.reference_lines) {
    if (!usable(h.y, plot.log_y)) continue;
    const double py = sy(h.y);
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(py) + "\" x2=\"" + num(kLeft + pw) + "\" y2=\"" +
           num(py) + "\" stroke=\"" + h.color + "\" stroke-dasharray=\"4,3\"/>\n";
    legend(h.label, h.color, true);
  }
  for (const auto& s : plot.series) {
    std::string points;
    std::string marks;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !usable(s.y[i], plot.log_y)) continue;
      const std::string px = num(sx(s.x[i]));
      const std::string py = num(sy(s.y[i]));
      points += px + "," + py + " ";
      if (s.markers) {
        marks += "<circle cx=\"" + px + "\" cy=\"" + py + "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
      }
    }
    out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"2\"" +
           (s.dashed ? " stroke-dasharray=\"6,4\"" : "") + " points=\"" + points + "\"/>\n";
    out += marks;
    legend(s.label, s.color, s.dashed);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace boosterforge::svg
