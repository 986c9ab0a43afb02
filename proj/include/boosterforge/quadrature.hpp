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

#include <cmath>
#include <concepts>
#include <cstddef>
#include <type_traits>

#include "boosterforge/errors.hpp"

namespace boosterforge {

struct SimpsonOptions {
  double tolerance = 1e-10;       // absolute, between successive doublings
  std::size_t initial_panels = 64; // rounded up to even
  std::size_t max_panels = std::size_t{1} << 24;
};

/// Composite Simpson rule, doubling the panel count until two successive
/// estimates agree to `tolerance`. Previously evaluated nodes are reused.
template <typename Fn>
  requires std::is_invocable_r_v<double, const Fn&, double>
double integrate_simpson(const Fn& f, double lo, double hi, SimpsonOptions opt = {}) {
  if (!(hi >= lo)) throw DomainError("integration bounds must satisfy lo <= hi");
  if (hi == lo) return 0.0;
  std::size_t panels = opt.initial_panels + (opt.initial_panels % 2);
  if (panels < 2) panels = 2;

  // Simpson = (h/3)(ends + 4 odd + 2 even). Track the endpoint sum and the
  // sum over all interior nodes; on refinement old nodes become "even".
  const double ends = f(lo) + f(hi);
  double h = (hi - lo) / static_cast<double>(panels);
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t k = 1; k < panels; ++k) {
    const double v = f(lo + static_cast<double>(k) * h);
    (k % 2 ? odd : even) += v;
  }
  double estimate = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
  while (panels < opt.max_panels) {
    panels *= 2;
    h *= 0.5;
    even += odd;
    odd = 0.0;
    for (std::size_t k = 1; k < panels; k += 2) odd += f(lo + static_cast<double>(k) * h);
    const double refined = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
    if (std::abs(refined - estimate) < opt.tolerance) return refined;
    estimate = refined;
  }
  throw ConstructionError("Simpson quadrature did not converge");
}

}  // namespace boosterforge
