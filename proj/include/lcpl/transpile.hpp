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

#include <optional>
#include <string>
#include <vector>

#include "lcpl/circuit.hpp"
#include "lcpl/coupling.hpp"
#include "lcpl/optimize.hpp"
#include "lcpl/statevector.hpp"

namespace lcpl {

/// CX between physical qubits (0-based) on a circuit as wide as the graph.
/// Adjacent pairs give one CX. Otherwise, with b the first hop from the
/// control a toward c, CX(a,c) = CX(a,b) CX(b,c) CX(a,b) CX(b,c) in
/// application order, recursing on CX(b,c). No SWAPs, so the qubit layout
/// is unchanged.
Circuit route_cnot(int control, int target, const CouplingGraph& graph);

/// Relabels logical qubits onto the device and routes every CX. Entry k of
/// `orientation` selects the target-side-first bridge order for the k-th
/// non-adjacent CX (default: control side first, as in route_cnot).
Circuit map_and_route(const Circuit& circuit, const CouplingGraph& graph, const QubitMapping& mapping,
                      const std::vector<bool>& orientation = {});

/// Largest number of qubits a CX/RZ segment may touch for
/// resynthesize_diagonals to rewrite it.
inline constexpr int kMaxResynthQubits = 3;

/// Rewrites each maximal run of CX, RZ and Z gates that touches at most
/// kMaxResynthQubits qubits and acts diagonally (its CX network composes to
/// the identity) as a shortest CX network over pairs adjacent under
/// `mapping`, with one RZ per parity term. Runs that are not diagonal, span
/// more qubits, or whose qubits are not connected on the device are copied
/// unchanged. Output is on logical qubits, equal up to global phase.
Circuit resynthesize_diagonals(const Circuit& circuit, const CouplingGraph& graph, const QubitMapping& mapping);

/// H -> RZ(pi/2) SX RZ(pi/2), Z -> RZ(pi); CX, RZ, SX, X are kept.
Circuit rewrite_to_device(const Circuit& circuit);

bool uses_device_gates_only(const Circuit& circuit);
bool cx_on_coupling_edges(const Circuit& circuit, const CouplingGraph& graph);

struct TranspileOptions {
  /// Explicit mapping; when absent every injective mapping is tried for
  /// circuits of width <= 5 and the cheapest kept (CX count, then depth,
  /// then lexicographic mapping). Wider circuits use the identity mapping.
  std::optional<QubitMapping> mapping;
  bool optimize = true;
  /// Also try resynthesize_diagonals before routing and keep it when the
  /// result is cheaper. Only used together with `optimize`.
  bool resynthesize = true;
};

struct TranspileResult {
  Circuit circuit{1};
  PassReport report;
};

TranspileResult transpile(const Circuit& circuit, const CouplingGraph& graph,
                          const TranspileOptions& options = {});

/// Bits of the given logical qubits (in order) read off a device-wide
/// measurement bitstring.
std::string logical_bits(const std::string& physical_bits, const QubitMapping& mapping,
                         int first_logical, int count);

}  // namespace lcpl
