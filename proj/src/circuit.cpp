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

#include "lcpl/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lcpl/errors.hpp"
#include "lcpl/statevector.hpp"

namespace lcpl {

Circuit::Circuit(int width) : width_(width) {
  if (width < 1) throw InvalidArgument("circuit width must be >= 1");
}

Circuit& Circuit::add(const Gate& gate) {
  auto check = [&](int q) {
    if (q < 1 || q > width_) {
      throw InvalidArgument(std::string(gate_name(gate.kind)) + ": qubit " + std::to_string(q) +
                            " out of range 1.." + std::to_string(width_));
    }
  };
  check(gate.qubit);
  if (gate.is_two_qubit()) {
    check(gate.target);
    if (gate.target == gate.qubit) throw InvalidArgument("cx: control equals target");
  } else if (gate.target != 0) {
    throw InvalidArgument(std::string(gate_name(gate.kind)) + " takes a single qubit");
  }
  if (gate.kind == GateKind::RZ && !std::isfinite(gate.theta)) {
    throw InvalidArgument("rz: angle is not finite");
  }
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width_ > width_) throw InvalidArgument("appended circuit is wider than target");
  for (const auto& g : other.gates_) add(g);
  return *this;
}

Circuit& Circuit::append_mapped(const Circuit& other, std::span<const int> qubit_map) {
  if (qubit_map.size() < static_cast<std::size_t>(other.width_)) {
    throw InvalidArgument("qubit map shorter than circuit width");
  }
  for (Gate g : other.gates_) {
    g.qubit = qubit_map[static_cast<std::size_t>(g.qubit - 1)];
    if (g.is_two_qubit()) g.target = qubit_map[static_cast<std::size_t>(g.target - 1)];
    add(g);
  }
  return *this;
}

GateCounts gate_counts(const Circuit& circuit) {
  GateCounts counts;
  for (auto k : kAllGateKinds) counts[k] = 0;
  for (const auto& g : circuit.gates()) ++counts[g.kind];
  return counts;
}

int depth(const Circuit& circuit) {
  std::vector<int> level(static_cast<std::size_t>(circuit.width()) + 1, 0);
  int best = 0;
  for (const auto& g : circuit.gates()) {
    int d = level[static_cast<std::size_t>(g.qubit)];
    if (g.is_two_qubit()) d = std::max(d, level[static_cast<std::size_t>(g.target)]);
    ++d;
    level[static_cast<std::size_t>(g.qubit)] = d;
    if (g.is_two_qubit()) level[static_cast<std::size_t>(g.target)] = d;
    best = std::max(best, d);
  }
  return best;
}

Eigen::MatrixXcd unitary_of(const Circuit& circuit) {
  if (circuit.width() > kMaxUnitaryWidth) {
    throw InvalidArgument("unitary_of: width " + std::to_string(circuit.width()) +
                          " exceeds " + std::to_string(kMaxUnitaryWidth));
  }
  const std::size_t dim = std::size_t{1} << circuit.width();
  Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    Statevector s = Statevector::basis(circuit.width(), col);
    s.apply(circuit);
    for (std::size_t row = 0; row < dim; ++row) {
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s[row];
    }
  }
  return u;
}

double phase_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix shapes differ");
  Eigen::Index pr = 0, pc = 0;
  a.cwiseAbs().maxCoeff(&pr, &pc);
  if (std::abs(b(pr, pc)) == 0.0) return std::numeric_limits<double>::infinity();
  Complex lambda = a(pr, pc) / b(pr, pc);
  lambda /= std::abs(lambda);
  return (a - lambda * b).cwiseAbs().maxCoeff();
}

bool unitary_equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
  return phase_deviation(a, b) <= tol;
}

}  // namespace lcpl
