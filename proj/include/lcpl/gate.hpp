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
#include <complex>
#include <string_view>

namespace lcpl {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

enum class GateKind { X, Z, H, RZ, SX, CX };

inline constexpr std::array<GateKind, 6> kAllGateKinds = {
    GateKind::X, GateKind::Z, GateKind::H, GateKind::RZ, GateKind::SX, GateKind::CX};

std::string_view gate_name(GateKind kind);

/// One gate of the circuit IR. Qubits are 1-based; qubit 1 is the most
/// significant bit of a basis index. For CX, `qubit` is the control and
/// `target` the target; single-qubit gates leave `target` at 0.
struct Gate {
  GateKind kind = GateKind::X;
  int qubit = 1;
  int target = 0;
  double theta = 0.0;

  static Gate x(int q) { return {GateKind::X, q, 0, 0.0}; }
  static Gate z(int q) { return {GateKind::Z, q, 0, 0.0}; }
  static Gate h(int q) { return {GateKind::H, q, 0, 0.0}; }
  static Gate sx(int q) { return {GateKind::SX, q, 0, 0.0}; }
  static Gate rz(int q, double theta) { return {GateKind::RZ, q, 0, theta}; }
  static Gate cx(int control, int target) { return {GateKind::CX, control, target, 0.0}; }

  bool is_two_qubit() const { return kind == GateKind::CX; }
  bool acts_on(int q) const { return qubit == q || (is_two_qubit() && target == q); }

  /// Structural equality; RZ angles are compared modulo 4*pi with tolerance
  /// 1e-12 so that serialization canonicalization does not break it.
  bool operator==(const Gate& other) const;
};

/// 2x2 unitary of a single-qubit gate, rows/columns in |0>,|1> order.
std::array<Complex, 4> single_qubit_matrix(const Gate& gate);

/// Angle reduced into (-2*pi, 2*pi]; RZ(theta) and RZ(theta + 4*pi) are equal.
double canonical_angle(double theta);

/// Angle reduced into (-pi, pi]; equal to the input up to a global phase of RZ.
double wrap_angle(double theta);

}  // namespace lcpl
