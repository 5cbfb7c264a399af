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


#include "lcpl/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <json.hpp>

#include "lcpl/errors.hpp"
#include "lcpl/parallel.hpp"
#include "lcpl/synth.hpp"
#include "lcpl/transpile.hpp"

namespace lcpl {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

// Explicit conversions keep the draw sequence independent of the standard
// library's distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
int pick(std::mt19937_64& rng, int n) { return 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

std::pair<int, int> edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

void check_rate(double p, const std::string& what) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument(what + " rate " + std::to_string(p) + " outside [0, 1]");
}

std::pair<int, int> parse_edge(const std::string& key) {
  const auto sep = key.find_first_of("-_");
  try {
    if (sep == std::string::npos) throw std::invalid_argument(key);
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const int a = std::stoi(key.substr(0, sep), &used_a);
    const int b = std::stoi(key.substr(sep + 1), &used_b);
    if (used_a != sep || used_b != key.size() - sep - 1) throw std::invalid_argument(key);
    return {a, b};
  } catch (const std::logic_error&) {
    throw InvalidArgument("cx_error key '" + key + "' is not of the form a-b");
  }
}

std::vector<double> rate_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& v = j[key];
  if (!v.is_array()) throw InvalidArgument(std::string("'") + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw InvalidArgument(std::string("'") + key + "' must be an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

NoiseProfile NoiseProfile::zero(const CouplingGraph& graph) { return uniform(graph, 0.0, 0.0, 0.0); }

NoiseProfile NoiseProfile::uniform(const CouplingGraph& graph, double cx, double readout, double single_qubit) {
  NoiseProfile p;
  p.name = graph.name();
  p.num_qubits = graph.num_qubits();
  for (auto [a, b] : graph.edges()) p.cx_error[edge_key(a, b)] = cx;
  p.readout_error.assign(static_cast<std::size_t>(p.num_qubits), readout);
  p.single_qubit_error.assign(static_cast<std::size_t>(p.num_qubits), single_qubit);
  p.validate();
  return p;
}

NoiseProfile NoiseProfile::quito() {
  NoiseProfile p;
  p.name = "quito";
  p.num_qubits = 5;
  p.cx_error = {{{0, 1}, 7.401e-3}, {{1, 2}, 6.435e-3}, {{1, 3}, 1.044e-2}, {{3, 4}, 1.890e-2}};
  p.readout_error = {3.81e-2, 4.11e-2, 7.17e-2, 3.41e-2, 3.62e-2};
  p.single_qubit_error = {3.23e-4, 2.90e-4, 2.74e-4, 3.44e-4, 4.57e-4};
  p.t1_us = {79.19, 117.96, 95.79, 107.55, 92.27};
  p.t2_us = {126.78, 132.4, 115.86, 22.83, 110.84};
  return p;
}

NoiseProfile NoiseProfile::quito_average() {
  const NoiseProfile q = quito();
  // Published device averages; the per-edge mean is 1.0794e-2.
  NoiseProfile p = uniform(q.graph(), 1.080e-2, 4.424e-2, mean_of(q.single_qubit_error));
  p.name = "quito-average";
  p.t1_us = q.t1_us;
  p.t2_us = q.t2_us;
  return p;
}

NoiseProfile NoiseProfile::builtin(std::string_view name) {
  if (name == "default" || name == "zero") {
    NoiseProfile p = zero(CouplingGraph::quito());
    p.name = "zero";
    return p;
  }
  if (name == "quito") return quito();
  if (name == "quito-average") return quito_average();
  throw InvalidArgument("unknown noise profile '" + std::string(name) + "'");
}

NoiseProfile NoiseProfile::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("noise profile JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("noise profile JSON must be an object");

  NoiseProfile p;
  p.name = j.value("name", std::string("custom"));
  int max_qubit = -1;
  if (j.contains("cx_error")) {
    if (!j["cx_error"].is_object()) throw InvalidArgument("'cx_error' must map \"a-b\" to a rate");
    for (const auto& [key, value] : j["cx_error"].items()) {
      if (!value.is_number()) throw InvalidArgument("cx_error '" + key + "' must be a number");
      auto [a, b] = parse_edge(key);
      if (a < 0 || b < 0 || a == b) throw InvalidArgument("cx_error key '" + key + "' is not a qubit pair");
      p.cx_error[edge_key(a, b)] = value.get<double>();
      max_qubit = std::max({max_qubit, a, b});
    }
  }
  p.readout_error = rate_list(j, "readout_error");
  p.single_qubit_error = rate_list(j, "sq_error");
  p.t1_us = rate_list(j, "t1_us");
  p.t2_us = rate_list(j, "t2_us");

  std::size_t inferred = std::max({static_cast<std::size_t>(max_qubit + 1), p.readout_error.size(),
                                   p.single_qubit_error.size()});
  if (j.contains("num_qubits")) {
    if (!j["num_qubits"].is_number_integer() || j["num_qubits"].get<int>() < 1) {
      throw InvalidArgument("'num_qubits' must be a positive integer");
    }
    inferred = static_cast<std::size_t>(j["num_qubits"].get<int>());
  }
  if (inferred == 0) throw InvalidArgument("noise profile names no qubits");
  p.num_qubits = static_cast<int>(inferred);
  if (p.readout_error.empty()) p.readout_error.assign(inferred, 0.0);
  if (p.single_qubit_error.empty()) p.single_qubit_error.assign(inferred, 0.0);
  p.validate();
  return p;
}

std::string NoiseProfile::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["num_qubits"] = num_qubits;
  j["cx_error"] = nlohmann::json::object();
  for (const auto& [e, rate] : cx_error) j["cx_error"][std::to_string(e.first) + "-" + std::to_string(e.second)] = rate;
  j["readout_error"] = readout_error;
  j["sq_error"] = single_qubit_error;
  if (!t1_us.empty()) j["t1_us"] = t1_us;
  if (!t2_us.empty()) j["t2_us"] = t2_us;
  return j.dump();
}

void NoiseProfile::validate() const {
  if (num_qubits < 1) throw InvalidArgument("noise profile needs at least one qubit");
  const auto n = static_cast<std::size_t>(num_qubits);
  if (readout_error.size() != n || single_qubit_error.size() != n) {
    throw InvalidArgument("noise profile lists must have one entry per qubit (" + std::to_string(n) + ")");
  }
  for (const auto& [e, rate] : cx_error) {
    if (e.first < 0 || e.second >= num_qubits || e.first == e.second) {
      throw InvalidArgument("cx_error edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                            " out of range");
    }
    check_rate(rate, "cx_error");
  }
  for (double r : readout_error) check_rate(r, "readout_error");
  for (double r : single_qubit_error) check_rate(r, "sq_error");
}

NoiseProfile NoiseProfile::scaled(double cx_factor, double readout_factor, double single_qubit_factor) const {
  if (cx_factor < 0 || readout_factor < 0 || single_qubit_factor < 0) {
    throw InvalidArgument("noise scale factors must be non-negative");
  }
  NoiseProfile p = *this;
  for (auto& [e, rate] : p.cx_error) rate = std::min(1.0, rate * cx_factor);
  for (auto& r : p.readout_error) r = std::min(1.0, r * readout_factor);
  for (auto& r : p.single_qubit_error) r = std::min(1.0, r * single_qubit_factor);
  return p;
}

double NoiseProfile::cx(int a, int b) const {
  auto it = cx_error.find(edge_key(a, b));
  return it == cx_error.end() ? 0.0 : it->second;
}

CouplingGraph NoiseProfile::graph() const {
  std::vector<CouplingGraph::Edge> edges;
  for (const auto& [e, rate] : cx_error) edges.push_back(e);
  try {
    return CouplingGraph(num_qubits, edges, name);
  } catch (const InvalidArgument&) {
    return CouplingGraph::linear(num_qubits);
  }
}

Histogram run_noisy(const Circuit& circuit, const NoiseProfile& profile, int shots, std::uint64_t seed) {
  profile.validate();
  if (shots < 1) throw InvalidArgument("shots must be at least 1");
  if (circuit.width() > profile.num_qubits) {
    throw InvalidArgument("circuit needs " + std::to_string(circuit.width()) + " qubits, noise profile has " +
                          std::to_string(profile.num_qubits));
  }
  const auto& gates = circuit.gates();
  std::vector<double> rate(gates.size(), 0.0);
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const Gate& g = gates[k];
    if (g.kind == GateKind::CX) {
      rate[k] = profile.cx(g.qubit - 1, g.target - 1);
    } else if (g.kind != GateKind::RZ) {
      rate[k] = profile.single_qubit_error[static_cast<std::size_t>(g.qubit - 1)];
    }
  }

  auto cumulative = [](const Statevector& state) {
    std::vector<double> cdf(state.dim());
    double acc = 0.0;
    for (std::size_t b = 0; b < state.dim(); ++b) cdf[b] = acc += state.probability(b);
    return cdf;
  };
  Statevector clean(circuit.width());
  clean.apply(circuit);
  const std::vector<double> clean_cdf = cumulative(clean);
  const int width = circuit.width();

  std::vector<std::uint64_t> outcome(static_cast<std::size_t>(shots));
  parallel_for(static_cast<std::uint64_t>(shots), [&](std::uint64_t shot) {
    std::mt19937_64 rng(derive_seed(seed, shot));
    std::vector<std::pair<std::size_t, int>> events;
    for (std::size_t k = 0; k < gates.size(); ++k) {
      const double u = unit(rng);
      const int pauli = pick(rng, gates[k].is_two_qubit() ? 15 : 3);
      if (u < rate[k]) events.emplace_back(k, pauli);
    }
    std::vector<double> noisy_cdf;
    if (!events.empty()) {
      Statevector state(width);
      std::size_t next = 0;
      for (std::size_t k = 0; k < gates.size(); ++k) {
        state.apply(gates[k]);
        if (next < events.size() && events[next].first == k) {
          const int pauli = events[next++].second;
          if (gates[k].is_two_qubit()) {
            state.apply_pauli(gates[k].qubit, pauli / 4);
            state.apply_pauli(gates[k].target, pauli % 4);
          } else {
            state.apply_pauli(gates[k].qubit, pauli);
          }
        }
      }
      noisy_cdf = cumulative(state);
    }
    const auto& cdf = events.empty() ? clean_cdf : noisy_cdf;
    const double u = unit(rng) * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::uint64_t b = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1));
    for (int q = 1; q <= width; ++q) {
      if (unit(rng) < profile.readout_error[static_cast<std::size_t>(q - 1)]) b ^= std::uint64_t{1} << (width - q);
    }
    outcome[shot] = b;
  });

  Histogram hist;
  for (auto b : outcome) ++hist[index_to_bits(b, width)];
  return hist;
}

bool asp_success(const std::string& measured_x, const SecretString& s) {
  const std::string secret = s.str();
  if (measured_x.size() != secret.size()) return false;
  const std::size_t checked = secret.size() % 2 == 1 ? secret.size() - 1 : secret.size();
  return measured_x.compare(0, checked, secret, 0, checked) == 0;
}

AspReport estimate_asp(const SecretString& s, const NoiseProfile& profile, int trials, int shots,
                       std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  if (shots < 1) throw InvalidArgument("shots must be at least 1");
  profile.validate();
  const FullCircuit full = build_full_circuit(s);
  const CouplingGraph graph = profile.graph();
  const TranspileResult tr = transpile(full.circuit, graph);

  AspReport rep;
  rep.secret = s.str();
  rep.shots = shots;
  rep.trials = trials;
  rep.seed = seed;
  rep.device = profile.name;
  rep.mapping = tr.report.mapping;
  rep.counts = tr.report.final_counts;
  rep.depth = tr.report.final_depth;
  for (int trial = 0; trial < trials; ++trial) {
    const Histogram hist = run_noisy(tr.circuit, profile, shots, derive_seed(seed, static_cast<std::uint64_t>(trial) << 32));
    std::uint64_t ok = 0;
    for (const auto& [bits, count] : hist) {
      if (asp_success(logical_bits(bits, tr.report.mapping, 1, s.size()), s)) ok += count;
    }
    rep.successes.push_back(ok);
    rep.probabilities.push_back(static_cast<double>(ok) / shots);
  }
  rep.mean = mean_of(rep.probabilities);
  if (trials > 1) {
    double ss = 0.0;
    for (double p : rep.probabilities) ss += (p - rep.mean) * (p - rep.mean);
    rep.stddev = std::sqrt(ss / (trials - 1));
  }
  return rep;
}

}  // namespace lcpl
