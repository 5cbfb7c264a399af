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

#include "lcpl/coupling.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include <json.hpp>

#include "lcpl/errors.hpp"

namespace lcpl {

namespace {
constexpr int kUnreachable = std::numeric_limits<int>::max();
}

CouplingGraph::CouplingGraph(int num_qubits, std::vector<Edge> edges, std::string name)
    : num_qubits_(num_qubits), name_(std::move(name)) {
  if (num_qubits < 1) throw InvalidArgument("coupling graph needs at least one qubit");
  adj_.resize(static_cast<std::size_t>(num_qubits));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits) {
      throw InvalidArgument("edge " + std::to_string(a) + "-" + std::to_string(b) + " out of range");
    }
    if (a == b) throw InvalidArgument("self-loop on qubit " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (std::find(edges_.begin(), edges_.end(), Edge{a, b}) != edges_.end()) continue;
    edges_.emplace_back(a, b);
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  const auto n = static_cast<std::size_t>(num_qubits);
  dist_.assign(n, std::vector<int>(n, kUnreachable));
  for (std::size_t src = 0; src < n; ++src) {
    std::deque<int> frontier{static_cast<int>(src)};
    dist_[src][src] = 0;
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop_front();
      for (int v : adj_[static_cast<std::size_t>(u)]) {
        auto& d = dist_[src][static_cast<std::size_t>(v)];
        if (d == kUnreachable) {
          d = dist_[src][static_cast<std::size_t>(u)] + 1;
          frontier.push_back(v);
        }
      }
    }
    for (std::size_t dst = 0; dst < n; ++dst) {
      if (dist_[src][dst] == kUnreachable) throw InvalidArgument("coupling graph is not connected");
    }
  }
}

CouplingGraph CouplingGraph::linear(int n) {
  std::vector<Edge> edges;
  for (int k = 0; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
  return CouplingGraph(n, std::move(edges), "linear" + std::to_string(n));
}

CouplingGraph CouplingGraph::quito() {
  return CouplingGraph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}, "quito");
}

CouplingGraph CouplingGraph::builtin(std::string_view name) {
  if (name == "quito") return quito();
  if (name.starts_with("linear") && name.size() > 6) {
    auto digits = name.substr(6);
    if (digits.size() <= 3 && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      int n = std::stoi(std::string(digits));
      if (n >= 1) return linear(n);
    }
  }
  throw InvalidArgument("unknown coupling graph '" + std::string(name) + "'");
}

CouplingGraph CouplingGraph::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("coupling graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("qubits") || !j.contains("edges") ||
      !j["qubits"].is_number_integer() || !j["edges"].is_array()) {
    throw InvalidArgument("coupling graph JSON needs integer 'qubits' and array 'edges'");
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InvalidArgument("each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::string name = j.value("name", std::string("custom"));
  return CouplingGraph(j["qubits"].get<int>(), std::move(edges), std::move(name));
}

std::string CouplingGraph::to_json() const {
  nlohmann::json j;
  j["qubits"] = num_qubits_;
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : edges_) j["edges"].push_back({a, b});
  j["name"] = name_;
  return j.dump();
}

bool CouplingGraph::adjacent(int a, int b) const { return distance(a, b) == 1; }

int CouplingGraph::distance(int a, int b) const {
  if (a < 0 || b < 0 || a >= num_qubits_ || b >= num_qubits_) {
    throw InvalidArgument("physical qubit out of range");
  }
  return dist_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::vector<int> CouplingGraph::shortest_path(int a, int b) const {
  std::vector<int> path{a};
  int cur = a;
  while (cur != b) {
    const int remaining = distance(cur, b);
    for (int v : adj_[static_cast<std::size_t>(cur)]) {
      if (distance(v, b) == remaining - 1) {
        cur = v;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

QubitMapping QubitMapping::identity(int width) {
  QubitMapping m;
  m.physical.resize(static_cast<std::size_t>(width));
  for (int k = 0; k < width; ++k) m.physical[static_cast<std::size_t>(k)] = k;
  return m;
}

void QubitMapping::validate(int num_physical) const {
  std::vector<bool> used(static_cast<std::size_t>(std::max(num_physical, 0)), false);
  for (int p : physical) {
    if (p < 0 || p >= num_physical) {
      throw InvalidArgument("mapping targets physical qubit " + std::to_string(p) +
                            " outside 0.." + std::to_string(num_physical - 1));
    }
    if (used[static_cast<std::size_t>(p)]) {
      throw InvalidArgument("mapping is not injective (Q" + std::to_string(p) + " used twice)");
    }
    used[static_cast<std::size_t>(p)] = true;
  }
}

}  // namespace lcpl
