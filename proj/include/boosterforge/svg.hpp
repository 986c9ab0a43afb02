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

#pragma once

// Minimal hand-written SVG line plots: axes, ticks, polylines, a legend.

#include <string>
#include <vector>

namespace boosterforge::svg {

struct Series {
  std::vector<double> x;
  std::vector<double> y;
  std::string label;
  std::string color = "#1f77b4";
  bool dashed = false;
  bool markers = true;
};

struct HorizontalLine {
  double y = 0.0;
  std::string label;
  std::string color = "#d62728";
};

struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  std::vector<Series> series;
  std::vector<HorizontalLine> reference_lines;
};

/// Non-finite points, and non-positive ones on a log axis, are skipped.
std::string render(const LinePlot& plot);

}  // namespace boosterforge::svg
