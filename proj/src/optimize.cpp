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

#include "lcpl/optimize.hpp"

#include <cmath>
#include <optional>

namespace lcpl {

namespace {

constexpr double kZeroAngle = 1e-12;

bool is_phase(const Gate& g) { return g.kind == GateKind::RZ || g.kind == GateKind::Z; }
bool is_x_like(const Gate& g) { return g.kind == GateKind::X || g.kind == GateKind::SX; }

bool shares_qubit(const Gate& a, const Gate& b) {
  return b.acts_on(a.qubit) || (a.is_two_qubit() && b.acts_on(a.target));
}

double phase_angle(const Gate& g) { return g.kind == GateKind::Z ? kPi : g.theta; }

bool negligible(double theta) { return std::fabs(wrap_angle(theta)) < kZeroAngle; }

/// Result of fusing two adjacent gates on the same qubits: nullopt inside
/// means both vanish.
using Fusion = std::optional<std::optional<Gate>>;

Fusion fuse(const Gate& a, const Gate& b) {
  if (a.is_two_qubit() || b.is_two_qubit()) {
    if (a.kind == GateKind::CX && b.kind == GateKind::CX && a.qubit == b.qubit && a.target == b.target) {
      return std::optional<Gate>{};
    }
    return std::nullopt;
  }
  if (a.qubit != b.qubit) return std::nullopt;
  if (a.kind == b.kind &&
      (a.kind == GateKind::X || a.kind == GateKind::Z || a.kind == GateKind::H)) {
    return std::optional<Gate>{};
  }
  if (a.kind == GateKind::SX && b.kind == GateKind::SX) return std::optional<Gate>{Gate::x(a.qubit)};
  if (is_phase(a) && is_phase(b)) {
    const double sum = phase_angle(a) + phase_angle(b);
    if (negligible(sum)) return std::optional<Gate>{};
    return std::optional<Gate>{Gate::rz(a.qubit, wrap_angle(sum))};
  }
  return std::nullopt;
}

class Optimizer {
 public:
  explicit Optimizer(const Circuit& c) : width_(c.width()) {
    for (Gate g : c.gates()) {
      if (g.kind == GateKind::RZ) {
        if (negligible(g.theta)) continue;
        g.theta = wrap_angle(g.theta);
      }
      gates_.push_back(g);
    }
  }

  bool sweep() {
    alive_.assign(gates_.size(), true);
    bool changed = false;
    for (std::size_t i = 0; i < gates_.size(); ++i) {
      if (!alive_[i]) continue;
      auto partner = find_partner(i);
      if (!partner) continue;
      auto [j, fused] = *partner;
      alive_[i] = false;
      if (fused) {
        gates_[j] = *fused;
      } else {
        alive_[j] = false;
      }
      changed = true;
    }
    std::vector<Gate> kept;
    kept.reserve(gates_.size());
    for (std::size_t i = 0; i < gates_.size(); ++i) {
      if (alive_[i]) kept.push_back(gates_[i]);
    }
    gates_ = std::move(kept);
    return changed;
  }

  Circuit circuit() const {
    Circuit c(width_);
    for (const auto& g : gates_) c.add(g);
    return c;
  }

 private:
  struct Partner {
    std::size_t index;
    std::optional<Gate> fused;
  };

  std::size_t next_alive(std::size_t j) const {
    while (j < gates_.size() && !alive_[j]) ++j;
    return j;
  }

  // End index of a CX(c,t) ... CX(c,t) block starting at `open` whose gates
  // on {c, t} in between are all single-qubit phases, or nullopt.
  std::optional<std::size_t> diagonal_sandwich_end(std::size_t open) const {
    const Gate& cx = gates_[open];
    for (std::size_t k = next_alive(open + 1); k < gates_.size(); k = next_alive(k + 1)) {
      const Gate& h = gates_[k];
      if (!shares_qubit(cx, h)) continue;
      if (h.kind == GateKind::CX && h.qubit == cx.qubit && h.target == cx.target) return k;
      if (!is_phase(h)) return std::nullopt;
    }
    return std::nullopt;
  }

  std::optional<Partner> find_partner(std::size_t i) const {
    const Gate& g = gates_[i];
    for (std::size_t j = next_alive(i + 1); j < gates_.size(); j = next_alive(j + 1)) {
      const Gate& h = gates_[j];
      if (!shares_qubit(g, h)) continue;
      if (auto f = fuse(g, h)) return Partner{j, *f};
      if (gates_commute(g, h)) continue;
      if (is_phase(g) && h.kind == GateKind::CX && h.target == g.qubit) {
        if (auto end = diagonal_sandwich_end(j)) {
          j = *end;
          continue;
        }
      }
      return std::nullopt;
    }
    return std::nullopt;
  }

  int width_;
  std::vector<Gate> gates_;
  std::vector<bool> alive_;
};

}  // namespace

bool PassReport::legal() const {
  for (const auto& [name, ok] : flags) {
    if (!ok) return false;
  }
  return true;
}

bool gates_commute(const Gate& g1, const Gate& g2) {
  if (!shares_qubit(g1, g2)) return true;
  if (g1 == g2) return true;
  if (!g1.is_two_qubit() && !g2.is_two_qubit()) {
    return (is_phase(g1) && is_phase(g2)) || (is_x_like(g1) && is_x_like(g2));
  }
  if (g1.is_two_qubit() && g2.is_two_qubit()) {
    if (g1.qubit == g2.target || g1.target == g2.qubit) return false;
    // Shared control only, or shared target only.
    return true;
  }
  const Gate& single = g1.is_two_qubit() ? g2 : g1;
  const Gate& cx = g1.is_two_qubit() ? g1 : g2;
  if (single.qubit == cx.qubit) return is_phase(single);
  return is_x_like(single);
}

OptimizeResult optimize(const Circuit& circuit) {
  OptimizeResult out;
  Optimizer opt(circuit);
  bool converged = false;
  int sweeps = 0;
  while (sweeps < kMaxOptimizeSweeps) {
    ++sweeps;
    if (!opt.sweep()) {
      converged = true;
      break;
    }
  }
  out.circuit = opt.circuit();
  const auto before = gate_counts(circuit);
  out.report.final_counts = gate_counts(out.circuit);
  out.report.passes.push_back(PassStat{"optimize", circuit.size(), out.circuit.size(),
                                       before.at(GateKind::CX),
                                       out.report.final_counts.at(GateKind::CX)});
  out.report.final_depth = depth(out.circuit);
  out.report.flags["converged"] = converged;
  out.report.sweeps = sweeps;
  return out;
}

}  // namespace lcpl
