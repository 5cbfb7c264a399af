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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcpl {

/// Undirected device connectivity over physical qubits Q0..Q{N-1}.
/// Construction rejects self-loops, out-of-range endpoints and
/// disconnected graphs.
class CouplingGraph {
 public:
  using Edge = std::pair<int, int>;

  CouplingGraph(int num_qubits, std::vector<Edge> edges, std::string name = "custom");

  /// Q0 - Q1 - ... - Q{n-1}.
  static CouplingGraph linear(int n);

  /// Five-qubit T shape: Q0-Q1, Q1-Q2, Q1-Q3, Q3-Q4.
  static CouplingGraph quito();

  /// "quito" or "linear<N>" (e.g. "linear3").
  static CouplingGraph builtin(std::string_view name);

  /// {"qubits": 5, "edges": [[0,1],[1,2],[1,3],[3,4]]}
  static CouplingGraph from_json(std::string_view text);
  std::string to_json() const;

  int num_qubits() const { return num_qubits_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  bool adjacent(int a, int b) const;
  int distance(int a, int b) const;
  /// Shortest path a..b inclusive; ties broken toward lower qubit numbers.
  std::vector<int> shortest_path(int a, int b) const;

 private:
  int num_qubits_;
  std::vector<Edge> edges_;
  std::string name_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<int>> adj_;
};

/// Injective logical -> physical assignment. physical[k] is the 0-based
/// device qubit hosting logical (1-based) qubit k + 1.
struct QubitMapping {
  std::vector<int> physical;

  static QubitMapping identity(int width);

  int width() const { return static_cast<int>(physical.size()); }
  int to_physical(int logical) const { return physical[static_cast<std::size_t>(logical - 1)]; }

  /// Throws InvalidArgument unless injective and within `num_physical`.
  void validate(int num_physical) const;

  bool operator==(const QubitMapping&) const = default;
  auto operator<=>(const QubitMapping&) const = default;
};

}  // namespace lcpl
