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

#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "boosterforge/special_functions.hpp"

namespace sp = boosterforge::special;

TEST_CASE("erf matches the series/fraction oracle on [-6, 6]") {
  double worst = 0.0;
  for (int i = 0; i <= 1200; ++i) {
    const double x = -6.0 + 12.0 * i / 1200;
    worst = std::max(worst, std::abs(sp::erf(x) - static_cast<double>(oracle::erf(x))));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("erf basic values") {
  CHECK(sp::erf(0.0) == 0.0);
  CHECK(sp::erf(1.0) == doctest::Approx(0.8427007929497149).epsilon(1e-15));
  CHECK(sp::erf(-1.0) == -sp::erf(1.0));
  CHECK(1.0 - sp::erf(1.0) == doctest::Approx(0.15729920705028513).epsilon(1e-13));
}

TEST_CASE("erfc keeps relative accuracy in the far tail") {
  for (double x : {2.5, 5.0, 10.0, 20.0, 26.0}) {
    const double ref = static_cast<double>(oracle::erfc_fraction(x));
    CHECK(sp::erfc(x) == doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK(sp::erfc(-3.0) == doctest::Approx(2.0 - sp::erfc(3.0)).epsilon(1e-15));
}

TEST_CASE("erfcx and log_erfc stay finite beyond underflow") {
  CHECK(std::isfinite(sp::log_erfc(40.0)));
  CHECK(sp::log_erfc(40.0) == doctest::Approx(-1600.0 - std::log(40.0 * std::sqrt(M_PI)) +
                                              std::log1p(-1.0 / 3200.0))
                                  .epsilon(1e-9));
  CHECK(sp::erfcx(30.0) == doctest::Approx(1.0 / (30.0 * std::sqrt(M_PI)) * (1.0 - 1.0 / 1800.0)).epsilon(1e-6));
  CHECK(sp::log_erfc(0.5) == doctest::Approx(std::log(std::erfc(0.5))).epsilon(1e-14));
}

TEST_CASE("erfcinv and erfinv invert their forward functions") {
  for (double y : {1e-300, 1e-20, 1e-5, 0.1, 0.5, 1.0, 1.5, 1.9}) {
    CHECK(sp::erfc(sp::erfcinv(y)) == doctest::Approx(y).epsilon(1e-10));
  }
  for (double y : {-0.9, -0.1, 0.0, 0.3, 0.99}) {
    CHECK(sp::erf(sp::erfinv(y)) == doctest::Approx(y).epsilon(1e-12));
  }
}
