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

#include "lcpl/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "lcpl/circuit.hpp"
#include "lcpl/errors.hpp"

namespace lcpl {

namespace {

void check_width(int num_qubits) {
  if (num_qubits < 1 || num_qubits > Statevector::kMaxQubits) {
    throw InvalidArgument("statevector width must be in 1.." +
                          std::to_string(Statevector::kMaxQubits) + ", got " +
                          std::to_string(num_qubits));
  }
}

}  // namespace

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  check_width(num_qubits);
  amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

Statevector::Statevector(std::vector<Complex> amplitudes) : num_qubits_(0), amps_(std::move(amplitudes)) {
  if (amps_.empty() || !std::has_single_bit(amps_.size())) {
    throw InvalidArgument("amplitude vector length must be a power of two");
  }
  num_qubits_ = std::countr_zero(amps_.size());
  check_width(num_qubits_);
  if (std::fabs(norm() - 1.0) > 1e-9) throw InvalidArgument("amplitude vector is not normalized");
}

Statevector Statevector::basis(int num_qubits, std::uint64_t index) {
  Statevector s(num_qubits);
  if (index >= s.dim()) {
    throw InvalidArgument("basis index " + std::to_string(index) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double Statevector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void Statevector::check_qubit(int qubit) const {
  if (qubit < 1 || qubit > num_qubits_) {
    throw InvalidArgument("qubit " + std::to_string(qubit) + " out of range 1.." +
                          std::to_string(num_qubits_));
  }
}

std::uint64_t Statevector::bit_of(int qubit) const {
  return std::uint64_t{1} << (num_qubits_ - qubit);
}

void Statevector::apply(const Gate& gate) {
  check_qubit(gate.qubit);
  const std::size_t n = amps_.size();
  if (gate.kind == GateKind::CX) {
    check_qubit(gate.target);
    if (gate.target == gate.qubit) throw InvalidArgument("CX control equals target");
    const std::uint64_t c = bit_of(gate.qubit);
    const std::uint64_t t = bit_of(gate.target);
    for (std::size_t b = 0; b < n; ++b) {
      if ((b & c) && !(b & t)) std::swap(amps_[b], amps_[b | t]);
    }
    return;
  }

  const std::uint64_t m = bit_of(gate.qubit);
  switch (gate.kind) {
    case GateKind::X:
      for (std::size_t b = 0; b < n; ++b)
        if (!(b & m)) std::swap(amps_[b], amps_[b | m]);
      return;
    case GateKind::Z:
      for (std::size_t b = 0; b < n; ++b)
        if (b & m) amps_[b] = -amps_[b];
      return;
    case GateKind::RZ: {
      const auto u = single_qubit_matrix(gate);
      for (std::size_t b = 0; b < n; ++b) amps_[b] *= (b & m) ? u[3] : u[0];
      return;
    }
    default: {
      const auto u = single_qubit_matrix(gate);
      for (std::size_t b = 0; b < n; ++b) {
        if (b & m) continue;
        const Complex a0 = amps_[b];
        const Complex a1 = amps_[b | m];
        amps_[b] = u[0] * a0 + u[1] * a1;
        amps_[b | m] = u[2] * a0 + u[3] * a1;
      }
      return;
    }
  }
}

void Statevector::apply(const Circuit& circuit) {
  if (circuit.width() != num_qubits_) {
    throw InvalidArgument("circuit width " + std::to_string(circuit.width()) +
                          " does not match statevector width " + std::to_string(num_qubits_));
  }
  for (const auto& g : circuit.gates()) apply(g);
}

void Statevector::apply_phase_diagonal(std::span<const std::int8_t> signs) {
  if (signs.size() != amps_.size()) {
    throw InvalidArgument("diagonal length " + std::to_string(signs.size()) +
                          " does not match state dimension " + std::to_string(amps_.size()));
  }
  for (std::size_t b = 0; b < amps_.size(); ++b) {
    if (signs[b] < 0) amps_[b] = -amps_[b];
  }
}

void Statevector::apply_two_qubit(int qubit_a, int qubit_b, const Eigen::Matrix4cd& u) {
  check_qubit(qubit_a);
  check_qubit(qubit_b);
  if (qubit_a == qubit_b) throw InvalidArgument("two-qubit operator needs distinct qubits");
  const std::uint64_t ma = bit_of(qubit_a);
  const std::uint64_t mb = bit_of(qubit_b);
  for (std::size_t b = 0; b < amps_.size(); ++b) {
    if (b & (ma | mb)) continue;
    const std::array<std::size_t, 4> idx = {b, b | mb, b | ma, b | ma | mb};
    std::array<Complex, 4> in;
    for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += u(r, k) * in[k];
      amps_[idx[r]] = acc;
    }
  }
}

void Statevector::apply_pauli(int qubit, int pauli) {
  using namespace std::complex_literals;
  check_qubit(qubit);
  const std::uint64_t m = bit_of(qubit);
  switch (pauli) {
    case 0: return;
    case 1: apply(Gate::x(qubit)); return;
    case 2:
      // Y = i X Z
      for (std::size_t b = 0; b < amps_.size(); ++b) {
        if (b & m) continue;
        const Complex a0 = amps_[b];
        const Complex a1 = amps_[b | m];
        amps_[b] = -1.0i * a1;
        amps_[b | m] = 1.0i * a0;
      }
      return;
    case 3: apply(Gate::z(qubit)); return;
    default: throw InvalidArgument("pauli index must be 0..3");
  }
}

Statevector apply_gate(Statevector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

Statevector apply_phase_diagonal(Statevector state, std::span<const std::int8_t> signs) {
  state.apply_phase_diagonal(signs);
  return state;
}

std::string index_to_bits(std::uint64_t index, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int k = 0; k < width; ++k) {
    if (index & (std::uint64_t{1} << (width - 1 - k))) out[static_cast<std::size_t>(k)] = '1';
  }
  return out;
}

std::optional<std::uint64_t> deterministic_outcome(const Statevector& state, double tol) {
  for (std::size_t b = 0; b < state.dim(); ++b) {
    if (state.probability(b) > 1.0 - tol) return b;
  }
  return std::nullopt;
}

Histogram measure_all(const Statevector& state, std::optional<std::uint64_t> seed, int shots) {
  if (shots < 1) throw InvalidArgument("shots must be >= 1");
  Histogram hist;
  if (auto only = deterministic_outcome(state)) {
    hist[index_to_bits(*only, state.num_qubits())] = static_cast<std::uint64_t>(shots);
    return hist;
  }
  std::mt19937_64 rng(seed ? *seed : std::random_device{}());
  std::vector<double> weights(state.dim());
  for (std::size_t b = 0; b < state.dim(); ++b) weights[b] = state.probability(b);
  std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
  std::vector<std::uint64_t> counts(state.dim(), 0);
  for (int s = 0; s < shots; ++s) ++counts[dist(rng)];
  for (std::size_t b = 0; b < counts.size(); ++b) {
    if (counts[b] != 0) hist[index_to_bits(b, state.num_qubits())] = counts[b];
  }
  return hist;
}

bool equal_up_to_global_phase(const Statevector& a, const Statevector& b, double tol) {
  if (a.num_qubits() != b.num_qubits()) throw InvalidArgument("statevector widths differ");
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < a.dim(); ++i) {
    if (std::abs(a[i]) > std::abs(a[pivot])) pivot = i;
  }
  if (std::abs(b[pivot]) == 0.0) return false;
  // a = lambda * b  =>  lambda = a[p] / b[p], normalized to unit modulus.
  Complex lambda = a[pivot] / b[pivot];
  lambda /= std::abs(lambda);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::abs(a[i] - lambda * b[i]) > tol) return false;
  }
  return true;
}

}  // namespace lcpl
