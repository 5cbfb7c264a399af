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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lcpl/gate.hpp"

namespace lcpl {

class Circuit;

/// Dense amplitude vector over `num_qubits` qubits.
///
/// Basis index b encodes qubit 1 as its most significant bit, so for the
/// learner's register index = x * 2^t + q. Qubit k therefore lives at bit
/// position (num_qubits - k).
class Statevector {
 public:
  static constexpr int kMaxQubits = 24;

  /// |0...0> on `num_qubits` qubits.
  explicit Statevector(int num_qubits);

  /// Takes ownership of `amplitudes`; the length must be a power of two and
  /// the vector normalized within 1e-9.
  explicit Statevector(std::vector<Complex> amplitudes);

  static Statevector basis(int num_qubits, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](std::size_t index) const { return amps_[index]; }
  double probability(std::size_t index) const { return std::norm(amps_[index]); }
  double norm() const;

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

  /// Multiplies amplitude b by signs[b]. Entries must be +1 or -1.
  void apply_phase_diagonal(std::span<const std::int8_t> signs);

  /// Applies a 4x4 unitary to (high, low) = (qubit_a, qubit_b), with qubit_a
  /// the more significant bit of the 2-qubit sub-index.
  void apply_two_qubit(int qubit_a, int qubit_b, const Eigen::Matrix4cd& u);

  /// Pauli X/Y/Z (1/2/3) on a qubit; 0 is the identity.
  void apply_pauli(int qubit, int pauli);

 private:
  std::uint64_t bit_of(int qubit) const;
  void check_qubit(int qubit) const;

  int num_qubits_;
  std::vector<Complex> amps_;
};

Statevector apply_gate(Statevector state, const Gate& gate);
Statevector apply_phase_diagonal(Statevector state, std::span<const std::int8_t> signs);

/// Counts keyed by bitstring, qubit 1 first.
using Histogram = std::map<std::string, std::uint64_t>;

std::string index_to_bits(std::uint64_t index, int width);

/// Index of the single outcome whose probability exceeds 1 - tol, if any.
std::optional<std::uint64_t> deterministic_outcome(const Statevector& state, double tol = 1e-9);

/// Samples `shots` outcomes from |amplitude|^2. When one outcome carries
/// probability above 1 - 1e-9 it is returned for every shot without drawing.
/// Without a seed a nondeterministic one is used.
Histogram measure_all(const Statevector& state, std::optional<std::uint64_t> seed, int shots);

/// True iff some |lambda| = 1 gives max_b |a[b] - lambda * b[b]| <= tol.
/// Lambda is fixed by the largest-magnitude amplitude of `a`.
bool equal_up_to_global_phase(const Statevector& a, const Statevector& b, double tol);

}  // namespace lcpl
