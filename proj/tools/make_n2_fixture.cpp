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

// Regenerates the bundled N2-like spectrum fixture.
//
//   make_n2_fixture [OUTPUT]   (default: stdout)

#include <fstream>
#include <iostream>

#include "boosterforge/harness.hpp"

int main(int argc, char** argv) {
  const auto fixture = boosterforge::n2_like_fixture();
  const std::string text = boosterforge::format_spectrum_fixture(
      fixture.raw_eigenvalues, fixture.amplitudes,
      "Synthetic N2-like spectrum (Hartree): 64 levels, ground -108.98, gap 0.021, span 10.\n"
      "Ground amplitude 0.72; excited weights proportional to exp(-0.1 (j - 1)).\n"
      "Columns: eigenvalue Re(mu) Im(mu). Regenerate with make_n2_fixture.");
  if (argc < 2) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(argv[1], std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) {
    std::cerr << "cannot write " << argv[1] << "\n";
    return 1;
  }
  return 0;
}
