// Copyright 2026 The lcplearn Authors
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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcpl/circuit.hpp"
#include "lcpl/coupling.hpp"
#include "lcpl/oracle.hpp"

namespace lcpl {

/// A known oracle diagonal for one secret.
struct ReferenceDiagonal {
  const char* secret;
  int t;
  std::vector<std::int8_t> signs;
};

/// The eight reference diagonals: four for n = 2 and, for n = 3, the four
/// pairs s1 s2 {0,1} which share one diagonal.
const std::vector<ReferenceDiagonal>& reference_diagonals();

/// Published gate budget of the transpiled n = 2 and n = 3 circuits.
struct ReferenceBudget {
  std::size_t cx = 9;
  std::size_t rz = 10;
  std::size_t sx = 4;
  std::size_t x = 2;
  int depth = 15;
};
inline constexpr ReferenceBudget kReferenceBudget{};

/// Noiseless check of a transpiled full circuit: the mapped x register is
/// measured deterministically and, for odd n, the classical tail applied.
struct RecoveryCheck {
  bool recovered = false;
  double probability = 0.0;
  std::string measured_x;
};
RecoveryCheck check_transpiled_recovery(const Circuit& physical, const QubitMapping& mapping,
                                        const SecretString& s);

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;  // first few only
  double seconds = 0.0;
};

inline constexpr std::array<std::string_view, 5> kVerifySuites{"all", "classical", "quantum", "synth", "transpile"};

/// Runs one suite ("classical", "quantum", "synth", "transpile") or all of
/// them. max_n bounds the exhaustive classical and quantum sweeps
/// (classical 1..min(max_n, 12); quantum exhaustive up to min(max_n, 10),
/// then 64 seeded random secrets per length up to min(max_n, 16)).
std::vector<SuiteResult> run_verify(std::string_view suite, int max_n);

}  // namespace lcpl
