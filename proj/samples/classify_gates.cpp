// Copyright 2026 The qoc Authors
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


// Weyl chamber coordinates and perfect-entangler status of a few gates.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "qoc/qoc.hpp"

int main() {
  using namespace qoc;
  CMatrix swap = CMatrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  const CMatrix sqrt_swap = canonical_gate(kPi / 4, kPi / 4, kPi / 4);
  const std::vector<std::pair<std::string, CMatrix>> gates = {
      {"identity", CMatrix::Identity(4, 4)}, {"cnot", cnot()},          {"cphase(pi/2)", cphase(kPi / 2)},
      {"sqrt(swap)", sqrt_swap},             {"swap", swap}};
  std::printf("%-14s %8s %8s %8s  %-6s %s\n", "gate", "c1/pi", "c2/pi", "c3/pi", "PE", "distance");
  for (const auto& [name, u] : gates) {
    const auto c = weyl_coordinates(u);
    std::printf("%-14s %8.4f %8.4f %8.4f  %-6s %.4f\n", name.c_str(), c.c1 / kPi, c.c2 / kPi, c.c3 / kPi,
                is_perfect_entangler(c) ? "yes" : "no", pe_distance(c));
  }
  return 0;
}
