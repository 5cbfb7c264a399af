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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lcpl/circuit.hpp"
#include "lcpl/coupling.hpp"

namespace lcpl {

struct PassStat {
  std::string pass;
  std::size_t gates_before = 0;
  std::size_t gates_after = 0;
  std::size_t cx_before = 0;
  std::size_t cx_after = 0;
};

struct PassReport {
  std::vector<PassStat> passes;
  GateCounts final_counts;
  int final_depth = 0;
  /// Named checks, e.g. "converged", "device_gates", "coupling_edges".
  std::map<std::string, bool> flags;
  QubitMapping mapping;
  int sweeps = 0;

  bool legal() const;
};

/// Do g1 and g2 commute as matrices? Conservative: false means "unknown".
bool gates_commute(const Gate& g1, const Gate& g2);

inline constexpr int kMaxOptimizeSweeps = 50;

struct OptimizeResult {
  Circuit circuit{1};
  PassReport report;
};

/// Peephole optimization to a fixed point:
///  - RZ merging, RZ(a) RZ(b) = RZ(a + b), dropping angles that vanish
///    modulo 2*pi; Z folds into a neighbouring RZ;
///  - self-inverse cancellation (CX CX, X X, Z Z, H H) and SX SX = X;
///  - partners are searched through gates that commute with the first one
///    (disjoint qubits, RZ on a CX control, X on a CX target, CX pairs
///    sharing only a control or only a target);
///  - an RZ on a CX target may pass a CX (RZ..) CX sandwich on the same
///    pair, which is diagonal, but only when that reaches a merge partner.
/// The unitary is preserved up to global phase and the gate count never
/// grows.
OptimizeResult optimize(const Circuit& circuit);

}  // namespace lcpl
