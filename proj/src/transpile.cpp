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

#include "lcpl/transpile.hpp"

#include <tuple>

#include "lcpl/errors.hpp"
#include "lcpl/parallel.hpp"

namespace lcpl {

namespace {

constexpr int kAutoMappingMaxWidth = 5;
constexpr std::size_t kAutoMappingMaxCandidates = 100000;

// Both orders of the bridge identity realize CX(a,c):
//   control side first: CX(a,b) CX(b,c) CX(a,b) CX(b,c)
//   target side first:  CX(b,c) CX(a,b) CX(b,c) CX(a,b)
void emit_routed(Circuit& out, int a, int c, const CouplingGraph& graph, bool target_first) {
  if (graph.adjacent(a, c)) {
    out.add(Gate::cx(a + 1, c + 1));
    return;
  }
  const int b = graph.shortest_path(a, c)[1];
  for (int step = 0; step < 4; ++step) {
    if ((step % 2 == 0) != target_first) {
      out.add(Gate::cx(a + 1, b + 1));
    } else {
      emit_routed(out, b, c, graph, target_first);
    }
  }
}

std::size_t count_bridged(const Circuit& circuit, const CouplingGraph& graph, const QubitMapping& mapping) {
  std::size_t k = 0;
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::CX && !graph.adjacent(mapping.to_physical(g.qubit), mapping.to_physical(g.target))) ++k;
  }
  return k;
}

void enumerate_mappings(int width, int num_physical, std::vector<int>& cur, std::vector<bool>& used,
                        std::vector<QubitMapping>& out) {
  if (static_cast<int>(cur.size()) == width) {
    out.push_back(QubitMapping{cur});
    return;
  }
  for (int p = 0; p < num_physical; ++p) {
    if (used[static_cast<std::size_t>(p)]) continue;
    used[static_cast<std::size_t>(p)] = true;
    cur.push_back(p);
    enumerate_mappings(width, num_physical, cur, used, out);
    cur.pop_back();
    used[static_cast<std::size_t>(p)] = false;
  }
}

std::size_t mapping_count(int width, int num_physical) {
  std::size_t count = 1;
  for (int k = 0; k < width; ++k) {
    count *= static_cast<std::size_t>(num_physical - k);
    if (count > kAutoMappingMaxCandidates) return count;
  }
  return count;
}

TranspileResult run_pipeline(const Circuit& circuit, const CouplingGraph& graph,
                             const QubitMapping& mapping, bool do_optimize,
                             const std::vector<bool>& orientation) {
  TranspileResult res;
  res.report.mapping = mapping;

  Circuit routed = map_and_route(circuit, graph, mapping, orientation);
  const auto cx_in = gate_counts(circuit).at(GateKind::CX);
  res.report.passes.push_back(PassStat{"map_and_route", circuit.size(), routed.size(), cx_in,
                                       gate_counts(routed).at(GateKind::CX)});

  Circuit rewritten = rewrite_to_device(routed);
  const auto cx_routed = gate_counts(routed).at(GateKind::CX);
  res.report.passes.push_back(PassStat{"rewrite_to_device", routed.size(), rewritten.size(),
                                       cx_routed, cx_routed});

  if (do_optimize) {
    auto opt = optimize(rewritten);
    res.report.passes.push_back(opt.report.passes.front());
    res.report.flags["converged"] = opt.report.flags.at("converged");
    res.report.sweeps = opt.report.sweeps;
    res.circuit = std::move(opt.circuit);
  } else {
    res.circuit = std::move(rewritten);
  }
  res.report.final_counts = gate_counts(res.circuit);
  res.report.final_depth = depth(res.circuit);
  res.report.flags["device_gates"] = uses_device_gates_only(res.circuit);
  res.report.flags["coupling_edges"] = cx_on_coupling_edges(res.circuit, graph);
  return res;
}

bool cheaper(const TranspileResult& a, const TranspileResult& b) {
  return std::make_pair(a.report.final_counts.at(GateKind::CX), a.report.final_depth) <
         std::make_pair(b.report.final_counts.at(GateKind::CX), b.report.final_depth);
}

// Bridge orientations only matter once the optimizer runs; pick them by a
// single greedy pass over the bridged CX gates in circuit order.
TranspileResult run_oriented(const Circuit& circuit, const CouplingGraph& graph,
                             const QubitMapping& mapping, bool do_optimize) {
  std::vector<bool> orientation(do_optimize ? count_bridged(circuit, graph, mapping) : 0, false);
  TranspileResult best = run_pipeline(circuit, graph, mapping, do_optimize, orientation);
  for (std::size_t k = 0; k < orientation.size(); ++k) {
    orientation[k] = true;
    TranspileResult trial = run_pipeline(circuit, graph, mapping, do_optimize, orientation);
    if (cheaper(trial, best)) {
      best = std::move(trial);
    } else {
      orientation[k] = false;
    }
  }
  return best;
}

TranspileResult run_for_mapping(const Circuit& circuit, const CouplingGraph& graph,
                                const QubitMapping& mapping, const TranspileOptions& options) {
  TranspileResult best = run_oriented(circuit, graph, mapping, options.optimize);
  if (!options.optimize || !options.resynthesize) return best;
  Circuit resynth = resynthesize_diagonals(circuit, graph, mapping);
  if (resynth == circuit) return best;
  TranspileResult trial = run_oriented(resynth, graph, mapping, true);
  if (!cheaper(trial, best)) return best;
  const auto cx_in = gate_counts(circuit).at(GateKind::CX);
  trial.report.passes.insert(trial.report.passes.begin(),
                             PassStat{"resynthesize_diagonals", circuit.size(), resynth.size(), cx_in,
                                      gate_counts(resynth).at(GateKind::CX)});
  return trial;
}

}  // namespace

Circuit route_cnot(int control, int target, const CouplingGraph& graph) {
  if (control == target) throw InvalidArgument("route_cnot: control equals target");
  graph.distance(control, target);  // range check
  Circuit out(graph.num_qubits());
  emit_routed(out, control, target, graph, false);
  return out;
}

Circuit map_and_route(const Circuit& circuit, const CouplingGraph& graph, const QubitMapping& mapping,
                      const std::vector<bool>& orientation) {
  if (circuit.width() > graph.num_qubits()) {
    throw InvalidArgument("circuit needs " + std::to_string(circuit.width()) + " qubits but device '" +
                          graph.name() + "' has " + std::to_string(graph.num_qubits()));
  }
  if (mapping.width() != circuit.width()) {
    throw InvalidArgument("mapping covers " + std::to_string(mapping.width()) + " qubits, circuit has " +
                          std::to_string(circuit.width()));
  }
  mapping.validate(graph.num_qubits());
  Circuit out(graph.num_qubits());
  std::size_t bridged = 0;
  for (Gate g : circuit.gates()) {
    if (g.kind == GateKind::CX) {
      const int a = mapping.to_physical(g.qubit);
      const int c = mapping.to_physical(g.target);
      bool target_first = false;
      if (!graph.adjacent(a, c)) {
        target_first = bridged < orientation.size() && orientation[bridged];
        ++bridged;
      }
      emit_routed(out, a, c, graph, target_first);
      continue;
    }
    g.qubit = mapping.to_physical(g.qubit) + 1;
    out.add(g);
  }
  return out;
}

Circuit rewrite_to_device(const Circuit& circuit) {
  Circuit out(circuit.width());
  for (const auto& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::H:
        out.add(Gate::rz(g.qubit, kPi / 2)).add(Gate::sx(g.qubit)).add(Gate::rz(g.qubit, kPi / 2));
        break;
      case GateKind::Z: out.add(Gate::rz(g.qubit, kPi)); break;
      case GateKind::X:
      case GateKind::SX:
      case GateKind::RZ:
      case GateKind::CX: out.add(g); break;
    }
  }
  return out;
}

bool uses_device_gates_only(const Circuit& circuit) {
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::H || g.kind == GateKind::Z) return false;
  }
  return true;
}

bool cx_on_coupling_edges(const Circuit& circuit, const CouplingGraph& graph) {
  if (circuit.width() > graph.num_qubits()) return false;
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::CX && !graph.adjacent(g.qubit - 1, g.target - 1)) return false;
  }
  return true;
}

TranspileResult transpile(const Circuit& circuit, const CouplingGraph& graph, const TranspileOptions& options) {
  if (circuit.width() > graph.num_qubits()) {
    throw InvalidArgument("circuit needs " + std::to_string(circuit.width()) + " qubits but device '" +
                          graph.name() + "' has " + std::to_string(graph.num_qubits()));
  }
  if (options.mapping) return run_for_mapping(circuit, graph, *options.mapping, options);

  if (circuit.width() > kAutoMappingMaxWidth ||
      mapping_count(circuit.width(), graph.num_qubits()) > kAutoMappingMaxCandidates) {
    return run_for_mapping(circuit, graph, QubitMapping::identity(circuit.width()), options);
  }

  std::vector<QubitMapping> candidates;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(graph.num_qubits()), false);
  enumerate_mappings(circuit.width(), graph.num_qubits(), cur, used, candidates);

  std::vector<std::optional<TranspileResult>> results(candidates.size());
  parallel_for(candidates.size(), [&](std::uint64_t k) {
    results[k] = run_for_mapping(circuit, graph, candidates[k], options);
  });

  auto key = [](const TranspileResult& r) {
    return std::make_tuple(r.report.final_counts.at(GateKind::CX), r.report.final_depth,
                           std::cref(r.report.mapping.physical));
  };
  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (key(*results[k]) < key(*results[best])) best = k;
  }
  return std::move(*results[best]);
}

std::string logical_bits(const std::string& physical_bits, const QubitMapping& mapping,
                         int first_logical, int count) {
  std::string out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const int p = mapping.to_physical(first_logical + k);
    if (p < 0 || static_cast<std::size_t>(p) >= physical_bits.size()) {
      throw InvalidArgument("measurement string too short for mapping");
    }
    out.push_back(physical_bits[static_cast<std::size_t>(p)]);
  }
  return out;
}

}  // namespace lcpl
