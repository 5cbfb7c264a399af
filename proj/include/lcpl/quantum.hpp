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
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lcpl/circuit.hpp"
#include "lcpl/oracle.hpp"
#include "lcpl/statevector.hpp"

namespace lcpl {

/// Register layout of the quantum learner for a given n.
///
/// Even n: t = ceil(log2 n), n/2 rounds. Odd n >= 3: t = ceil(log2(n-1)),
/// (n-1)/2 rounds followed by one classical query. n = 1 has no quantum
/// part at all (t = 0, a single classical query).
struct AlgorithmLayout {
  int n = 0;
  bool odd = false;
  int t = 0;
  int rounds = 0;
  bool uses_classical_tail = false;

  static AlgorithmLayout for_length(int n);

  int width() const { return n + t; }
  /// Qubit index of the first q-register qubit.
  int q_offset() const { return n; }
};

/// q register value after round i: 0 for i = 0, 2i - 1 afterwards.
int q_value(int round);

/// The 4x4 interference operator mapping the single-sign-flipped uniform
/// superposition onto the flipped basis state. Real, symmetric, R^2 = I.
Eigen::Matrix4cd r_operator();

/// X gates on every q-register bit where q(i-1) and q(i) differ. The
/// returned circuit has width t with qubit 1 the most significant bit.
Circuit q_shift(int round, int t);

/// One learner round: H on x-qubits (2i-1, 2i) and the q shift, then the
/// phase oracle, then R on the same two x-qubits.
struct RoundCircuit {
  int round = 0;
  Circuit prepare{1};
  std::shared_ptr<const PhaseOracle> oracle;
  int r_high = 0;
  int r_low = 0;

  /// Runs the round; records one quantum oracle use.
  void apply(Statevector& state, QueryLedger& ledger) const;
};

RoundCircuit build_round_circuit(int round, const AlgorithmLayout& layout,
                                 std::shared_ptr<const PhaseOracle> oracle);

/// Snapshot of one round for certification and --trace output.
struct RoundTrace {
  int round = 0;
  int q_prev = 0;
  int q_cur = 0;
  BitString prefix;
  std::array<BitString, 4> candidates;
  std::array<Complex, 4> alphas{};
  std::optional<Statevector> psi1;
  std::optional<Statevector> psi2;
  std::optional<Statevector> psi3;
};

enum class CertStage {
  Input,         // state entering the round
  Superposition, // uniform 1/2 over the four candidates
  PhasePattern,  // exactly one -1/2 among the candidates
  Output,        // basis state with the two new bits written
};

std::string to_string(CertStage stage);

class CertificationError : public std::runtime_error {
 public:
  CertificationError(CertStage stage, const std::string& detail)
      : std::runtime_error("certification failed at " + to_string(stage) + ": " + detail),
        stage_(stage) {}
  CertStage stage() const { return stage_; }

 private:
  CertStage stage_;
};

/// Simulates rounds 1..i and checks the round-i state evolution against the
/// closed form within 1e-9 per amplitude. Throws CertificationError.
RoundTrace certify_round(const SecretString& s, int round);

struct QuantumOptions {
  bool record_traces = false;
};

struct QuantumResult {
  BitString recovered;
  BitString measured_x;
  std::uint64_t quantum_uses = 0;
  std::uint64_t classical_queries = 0;
  /// Probability of the measured basis outcome in the final state (1.0 for
  /// n = 1, which has no quantum part).
  double outcome_probability = 1.0;
  std::vector<RoundTrace> traces;
};

/// Learns s with ceil(n/2) oracle interactions: n/2 quantum rounds for even
/// n; (n-1)/2 rounds plus one classical query for odd n.
QuantumResult run_quantum_learn(const SecretString& s, const QuantumOptions& options = {});

/// Odd-n tail: given a measured x whose first n-1 bits are correct, one
/// query on (x, n-1) fixes the last bit.
BitString resolve_last_bit(const BitString& measured, Teacher& teacher);

}  // namespace lcpl
