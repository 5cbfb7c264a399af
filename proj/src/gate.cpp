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

#include "lcpl/gate.hpp"

#include <cmath>

#include "lcpl/errors.hpp"

namespace lcpl {

namespace {
constexpr double kAngleTol = 1e-12;
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::RZ: return "rz";
    case GateKind::SX: return "sx";
    case GateKind::CX: return "cx";
  }
  return "?";
}

double canonical_angle(double theta) {
  const double period = 4.0 * kPi;
  double r = std::fmod(theta, period);
  if (r > 2.0 * kPi) r -= period;
  if (r <= -2.0 * kPi) r += period;
  return r;
}

double wrap_angle(double theta) {
  const double period = 2.0 * kPi;
  double r = std::fmod(theta, period);
  if (r > kPi) r -= period;
  if (r <= -kPi) r += period;
  return r;
}

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind || qubit != other.qubit || target != other.target) return false;
  if (kind != GateKind::RZ) return true;
  double d = std::fabs(canonical_angle(theta) - canonical_angle(other.theta));
  return d <= kAngleTol || std::fabs(d - 4.0 * kPi) <= kAngleTol;
}

std::array<Complex, 4> single_qubit_matrix(const Gate& gate) {
  using namespace std::complex_literals;
  const double r2 = 1.0 / std::sqrt(2.0);
  switch (gate.kind) {
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::H: return {r2, r2, r2, -r2};
    case GateKind::RZ:
      return {std::exp(-0.5i * gate.theta), 0.0, 0.0, std::exp(0.5i * gate.theta)};
    case GateKind::SX:
      return {0.5 + 0.5i, 0.5 - 0.5i, 0.5 - 0.5i, 0.5 + 0.5i};
    case GateKind::CX: break;
  }
  throw InvalidArgument("single_qubit_matrix: CX is a two-qubit gate");
}

}  // namespace lcpl
