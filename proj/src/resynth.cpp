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


#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <vector>

#include "lcpl/transpile.hpp"

namespace lcpl {

namespace {

constexpr double kZeroAngle = 1e-12;

bool in_network(const Gate& g) {
  return g.kind == GateKind::CX || g.kind == GateKind::RZ || g.kind == GateKind::Z;
}

// Local qubit k holds a parity over the segment inputs, stored as a k-bit
// mask. The search state packs all rows plus the set of terms already
// placed.
struct Network {
  int k = 0;
  std::vector<int> qubits;                      // logical, 1-based
  std::vector<std::pair<int, int>> moves;       // local (control, target)
  std::vector<std::uint32_t> terms;             // parity masks needing an RZ
  std::vector<double> angles;

  std::uint32_t pack(const std::array<std::uint32_t, kMaxResynthQubits>& rows, std::uint32_t covered) const {
    std::uint32_t key = covered;
    for (int q = 0; q < k; ++q) key = (key << k) | rows[static_cast<std::size_t>(q)];
    return key;
  }

  std::uint32_t cover(const std::array<std::uint32_t, kMaxResynthQubits>& rows, std::uint32_t covered) const {
    for (std::size_t t = 0; t < terms.size(); ++t) {
      for (int q = 0; q < k; ++q) {
        if (rows[static_cast<std::size_t>(q)] == terms[t]) covered |= 1u << t;
      }
    }
    return covered;
  }
};

// Breadth-first search over (parities, placed terms); returns the move
// indices of a shortest network or nullopt when none exists.
std::optional<std::vector<int>> shortest_network(const Network& net) {
  using Rows = std::array<std::uint32_t, kMaxResynthQubits>;
  Rows start{};
  for (int q = 0; q < net.k; ++q) start[static_cast<std::size_t>(q)] = 1u << (net.k - 1 - q);
  const std::uint32_t all = (1u << net.terms.size()) - 1;

  struct Node {
    Rows rows;
    std::uint32_t covered;
    std::uint32_t parent;
    int move;
  };
  std::map<std::uint32_t, Node> seen;
  std::deque<std::uint32_t> frontier;
  const std::uint32_t c0 = net.cover(start, 0);
  const std::uint32_t k0 = net.pack(start, c0);
  seen.emplace(k0, Node{start, c0, k0, -1});
  frontier.push_back(k0);
  while (!frontier.empty()) {
    const std::uint32_t key = frontier.front();
    frontier.pop_front();
    const Node node = seen.at(key);
    if (node.covered == all && node.rows == start) {
      std::vector<int> path;
      for (std::uint32_t at = key; seen.at(at).move >= 0; at = seen.at(at).parent) path.push_back(seen.at(at).move);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t m = 0; m < net.moves.size(); ++m) {
      Rows rows = node.rows;
      auto [c, t] = net.moves[m];
      rows[static_cast<std::size_t>(t)] ^= rows[static_cast<std::size_t>(c)];
      const std::uint32_t covered = net.cover(rows, node.covered);
      const std::uint32_t next = net.pack(rows, covered);
      if (seen.contains(next)) continue;
      seen.emplace(next, Node{rows, covered, key, static_cast<int>(m)});
      frontier.push_back(next);
    }
  }
  return std::nullopt;
}

// Returns the replacement for one segment, or nullopt to keep it.
std::optional<Circuit> resynth_segment(const std::vector<Gate>& seg, int width, const CouplingGraph& graph,
                                       const QubitMapping& mapping) {
  // Parities over every qubit the segment touches (bit q-1 for qubit q).
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(width));
  for (int q = 0; q < width; ++q) rows[static_cast<std::size_t>(q)] = std::uint64_t{1} << q;
  const auto identity = rows;
  std::map<std::uint64_t, double> phase;
  std::size_t cx_in = 0;
  for (const auto& g : seg) {
    if (g.kind == GateKind::CX) {
      rows[static_cast<std::size_t>(g.target - 1)] ^= rows[static_cast<std::size_t>(g.qubit - 1)];
      ++cx_in;
    } else {
      phase[rows[static_cast<std::size_t>(g.qubit - 1)]] += g.kind == GateKind::Z ? kPi : g.theta;
    }
  }
  if (cx_in == 0 || rows != identity) return std::nullopt;

  // With an identity CX network the segment is the diagonal of its phase
  // terms, so only qubits occurring in some term matter.
  std::uint64_t support = 0;
  for (auto [mask, theta] : phase) {
    if (std::fabs(wrap_angle(theta)) >= kZeroAngle) support |= mask;
  }
  Network net;
  for (int q = 0; q < width; ++q) {
    if (support & (std::uint64_t{1} << q)) net.qubits.push_back(q + 1);
  }
  if (net.qubits.size() > static_cast<std::size_t>(kMaxResynthQubits)) return std::nullopt;
  net.k = static_cast<int>(net.qubits.size());
  auto to_local = [&](std::uint64_t mask) {
    std::uint32_t local = 0;
    for (int j = 0; j < net.k; ++j) {
      if (mask & (std::uint64_t{1} << (net.qubits[static_cast<std::size_t>(j)] - 1))) local |= 1u << (net.k - 1 - j);
    }
    return local;
  };
  for (auto [mask, theta] : phase) {
    if (std::fabs(wrap_angle(theta)) < kZeroAngle) continue;
    net.terms.push_back(to_local(mask));
    net.angles.push_back(wrap_angle(theta));
  }
  for (int a = 0; a < net.k; ++a) {
    for (int b = 0; b < net.k; ++b) {
      if (a != b && graph.adjacent(mapping.to_physical(net.qubits[static_cast<std::size_t>(a)]),
                                   mapping.to_physical(net.qubits[static_cast<std::size_t>(b)]))) {
        net.moves.emplace_back(a, b);
      }
    }
  }
  auto path = shortest_network(net);
  if (!path) return std::nullopt;

  Circuit out(width);
  std::vector<bool> placed(net.terms.size(), false);
  std::array<std::uint32_t, kMaxResynthQubits> local_rows{};
  for (int q = 0; q < net.k; ++q) local_rows[static_cast<std::size_t>(q)] = 1u << (net.k - 1 - q);
  auto place = [&](int q) {
    for (std::size_t t = 0; t < net.terms.size(); ++t) {
      if (!placed[t] && local_rows[static_cast<std::size_t>(q)] == net.terms[t]) {
        out.add(Gate::rz(net.qubits[static_cast<std::size_t>(q)], net.angles[t]));
        placed[t] = true;
      }
    }
  };
  for (int q = 0; q < net.k; ++q) place(q);
  for (int m : *path) {
    auto [c, t] = net.moves[static_cast<std::size_t>(m)];
    local_rows[static_cast<std::size_t>(t)] ^= local_rows[static_cast<std::size_t>(c)];
    out.add(Gate::cx(net.qubits[static_cast<std::size_t>(c)], net.qubits[static_cast<std::size_t>(t)]));
    place(t);
  }
  return out;
}

}  // namespace

Circuit resynthesize_diagonals(const Circuit& circuit, const CouplingGraph& graph, const QubitMapping& mapping) {
  Circuit out(circuit.width());
  std::vector<Gate> seg;
  auto flush = [&] {
    if (seg.empty()) return;
    if (auto r = resynth_segment(seg, circuit.width(), graph, mapping)) {
      out.append(*r);
    } else {
      for (const auto& g : seg) out.add(g);
    }
    seg.clear();
  };
  for (const auto& g : circuit.gates()) {
    if (in_network(g)) {
      seg.push_back(g);
    } else {
      flush();
      out.add(g);
    }
  }
  flush();
  return out;
}

}  // namespace lcpl
