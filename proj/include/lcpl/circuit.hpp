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
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lcpl/gate.hpp"

namespace lcpl {

/// Ordered gate list on a fixed number of qubits. Every gate is validated
/// on insertion, so a constructed Circuit always satisfies its invariants.
class Circuit {
 public:
  explicit Circuit(int width);

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& add(const Gate& gate);
  Circuit& append(const Circuit& other);

  /// Appends `other` with its qubit k relabelled to qubit_map[k - 1].
  Circuit& append_mapped(const Circuit& other, std::span<const int> qubit_map);

  bool operator==(const Circuit& other) const = default;

 private:
  int width_;
  std::vector<Gate> gates_;
};

/// Per-kind gate counts; every kind is present, possibly with zero.
using GateCounts = std::map<GateKind, std::size_t>;

GateCounts gate_counts(const Circuit& circuit);

/// Longest chain of gates linked by shared qubits.
int depth(const Circuit& circuit);

inline constexpr int kMaxUnitaryWidth = 12;

/// Full unitary in application order (the last gate multiplies from the
/// left). Requires width <= kMaxUnitaryWidth.
Eigen::MatrixXcd unitary_of(const Circuit& circuit);

/// Largest elementwise deviation between a and lambda*b, with unit-modulus
/// lambda fixed by the largest-magnitude entry of a.
double phase_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

bool unitary_equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol);

}  // namespace lcpl
