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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcpl/circuit.hpp"
#include "lcpl/oracle.hpp"

namespace lcpl {

/// Walsh expansion of a diagonal phase function over m qubits:
/// phi(b) = sum_w c_w (-1)^{popcount(w & b)}, where w and b are basis
/// indices (qubit 1 = most significant bit).
struct WalshSpectrum {
  int width = 0;
  std::vector<double> coefficients;

  double reconstruct(std::uint64_t b) const;
};

/// Spectrum of phi(b) = pi * [signs[b] == -1]. Length must be 2^m.
WalshSpectrum walsh_decompose(std::span<const std::int8_t> signs);

/// Spectrum of arbitrary real phases.
WalshSpectrum walsh_decompose_phases(std::span<const double> phases);

inline constexpr int kMaxSynthWidth = 12;

struct SynthOptions {
  /// Visit parity terms in Gray-code order so consecutive terms share all
  /// but one CNOT. Off: independent compute/RZ/uncompute ladders per term.
  bool gray_code = true;
};

/// {CX, RZ} circuit equal to diag(signs) up to a global phase. Uses at most
/// 2^m - 1 RZ and, in Gray order, at most 2^m - 2 CX.
Circuit synth_diagonal(std::span<const std::int8_t> signs, const SynthOptions& options = {});

/// Same construction for arbitrary diagonal phases e^{i phases[b]}.
Circuit synth_phase_diagonal(std::span<const double> phases, const SynthOptions& options = {});

/// The interference operator as H(1), CX(1,2), Z(1), X(2), H(1).
Circuit synth_R();

/// RZ(pi/2), SX, RZ(pi/2): the Hadamard up to a global phase.
Circuit decompose_H();

struct FullCircuitOptions {
  bool decompose_h = false;
  SynthOptions synth;
  /// q-register width override; defaults to the algorithm layout's t.
  std::optional<int> t;
};

/// Index range [first, last) of the gates belonging to each oracle instance
/// inside a full circuit, for reporting per-block counts.
struct OracleBlock {
  std::size_t first = 0;
  std::size_t last = 0;
};

struct FullCircuit {
  Circuit circuit{1};
  int n = 0;
  int t = 0;
  std::vector<OracleBlock> oracle_blocks;
};

/// Complete gate-level learner circuit for s (n >= 2): each round emits the
/// H pair, the q-shift X gates, the synthesized oracle and synth_R on the
/// round's qubit pair. Odd n still needs the classical tail afterwards.
FullCircuit build_full_circuit(const SecretString& s, const FullCircuitOptions& options = {});

}  // namespace lcpl
