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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcpl/circuit.hpp"
#include "lcpl/coupling.hpp"
#include "lcpl/oracle.hpp"
#include "lcpl/statevector.hpp"

namespace lcpl {

/// Per-gate depolarizing and readout-flip rates for a device. Physical
/// qubits are 0-based; CX rates are keyed by the unordered pair (a < b).
struct NoiseProfile {
  std::string name = "custom";
  int num_qubits = 0;
  std::map<std::pair<int, int>, double> cx_error;
  std::vector<double> readout_error;
  std::vector<double> single_qubit_error;
  /// Calibration only; the simulation ignores them.
  std::vector<double> t1_us;
  std::vector<double> t2_us;

  /// All rates zero, with the graph's edges present in cx_error.
  static NoiseProfile zero(const CouplingGraph& graph);
  static NoiseProfile uniform(const CouplingGraph& graph, double cx, double readout, double single_qubit);
  /// Calibration of the 5-qubit T-shaped device (edges 0-1, 1-2, 1-3, 3-4).
  static NoiseProfile quito();
  /// quito() topology with every CX/readout/1q rate replaced by its average.
  static NoiseProfile quito_average();
  static NoiseProfile builtin(std::string_view name);

  /// {"cx_error": {"0-1": p, ...}, "readout_error": [...], "sq_error": [...]}
  /// plus optional "name", "num_qubits", "t1_us", "t2_us". Missing lists
  /// default to zeros; the qubit count defaults to the longest list or the
  /// largest edge endpoint + 1.
  static NoiseProfile from_json(std::string_view text);
  std::string to_json() const;

  /// Throws InvalidArgument unless every rate lies in [0, 1] and lists have
  /// num_qubits entries.
  void validate() const;

  /// Rates multiplied per category and clamped to 1.
  NoiseProfile scaled(double cx_factor, double readout_factor, double single_qubit_factor) const;

  /// Rate for a CX on (a, b) in either direction; 0 for unlisted pairs.
  double cx(int a, int b) const;

  /// Graph spanned by the cx_error keys, or a line when those do not
  /// connect every qubit.
  CouplingGraph graph() const;
};

/// Monte-Carlo trajectories: after each CX a uniformly random nonidentity
/// 2-qubit Pauli with the edge's rate, after each non-RZ 1-qubit gate a
/// random nonidentity Pauli with the qubit's rate, then each measured bit
/// flips with its readout rate. Every shot consumes the same random draws
/// whatever the rates, so runs sharing a seed are paired. Results do not
/// depend on the thread count.
Histogram run_noisy(const Circuit& circuit, const NoiseProfile& profile, int shots, std::uint64_t seed);

struct AspReport {
  std::string secret;
  int shots = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> successes;
  std::vector<double> probabilities;
  double mean = 0.0;
  /// Sample standard deviation over trials; 0 for a single trial.
  double stddev = 0.0;
  std::string device;
  QubitMapping mapping;
  GateCounts counts;
  int depth = 0;
};

/// Does a measured x register identify s? Even n needs an exact match; odd
/// n needs the first n - 1 bits, since the last bit is settled afterwards
/// by one classical query.
bool asp_success(const std::string& measured_x, const SecretString& s);

/// Builds and transpiles the full circuit for s onto profile.graph() and
/// runs `trials` independent batches of `shots`.
AspReport estimate_asp(const SecretString& s, const NoiseProfile& profile, int trials, int shots,
                       std::uint64_t seed);

}  // namespace lcpl
