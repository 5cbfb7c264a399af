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


#include "lcpl/lcpl.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lcpl/classical.hpp"
#include "lcpl/errors.hpp"
#include "lcpl/noise.hpp"
#include "lcpl/qasm.hpp"
#include "lcpl/quantum.hpp"
#include "lcpl/synth.hpp"
#include "lcpl/transpile.hpp"
#include "lcpl/verify.hpp"

struct lcpl_circuit {
  lcpl::Circuit circuit;
};
struct lcpl_graph {
  lcpl::CouplingGraph graph;
};
struct lcpl_noise {
  lcpl::NoiseProfile profile;
};

namespace {

using nlohmann::json;
using namespace lcpl;

thread_local std::string g_last_error;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
lcpl_status guard(F&& body) {
  g_last_error.clear();
  try {
    body();
    return LCPL_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return LCPL_ERR_PARSE;
  } catch (const IoFailure& e) {
    g_last_error = e.what();
    return LCPL_ERR_IO;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return LCPL_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return LCPL_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LCPL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return LCPL_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) {
  if (out) *out = dup_string(j.dump(2));
}

json counts_json(const GateCounts& counts) {
  json j = json::object();
  for (auto [kind, n] : counts) j[gate_name(kind)] = n;
  return j;
}

json circuit_stats(const Circuit& c) {
  return json{{"width", c.width()}, {"gates", c.size()}, {"counts", counts_json(gate_counts(c))}, {"depth", depth(c)}};
}

json amplitudes_json(const Statevector& state) {
  json out = json::array();
  for (std::size_t b = 0; b < state.dim(); ++b) {
    const Complex a = state[b];
    if (std::abs(a) < 1e-12) continue;
    out.push_back({{"basis", index_to_bits(b, state.num_qubits())}, {"re", a.real()}, {"im", a.imag()}});
  }
  return out;
}

json trace_json(const RoundTrace& tr) {
  json j{{"round", tr.round}, {"q_prev", tr.q_prev}, {"q_cur", tr.q_cur}, {"prefix", tr.prefix.str()}};
  j["candidates"] = json::array();
  j["alphas"] = json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    j["candidates"].push_back(tr.candidates[k].str());
    j["alphas"].push_back({tr.alphas[k].real(), tr.alphas[k].imag()});
  }
  if (tr.psi1) j["after_prepare"] = amplitudes_json(*tr.psi1);
  if (tr.psi2) j["after_oracle"] = amplitudes_json(*tr.psi2);
  if (tr.psi3) j["after_r"] = amplitudes_json(*tr.psi3);
  return j;
}

json pass_report_json(const PassReport& r) {
  json j;
  j["counts"] = counts_json(r.final_counts);
  j["depth"] = r.final_depth;
  j["mapping"] = r.mapping.physical;
  j["passes"] = json::array();
  for (const auto& p : r.passes) {
    j["passes"].push_back({{"pass", p.pass},
                           {"gates_before", p.gates_before},
                           {"gates_after", p.gates_after},
                           {"cx_before", p.cx_before},
                           {"cx_after", p.cx_after}});
  }
  j["flags"] = r.flags;
  j["legal"] = r.legal();
  j["sweeps"] = r.sweeps;
  return j;
}

json base(const char* command) { return json{{"schema_version", LCPL_SCHEMA_VERSION}, {"command", command}}; }

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure(std::string("cannot read '") + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

extern "C" {

const char* lcpl_version(void) { return "0.1.0"; }

const char* lcpl_last_error(void) { return g_last_error.c_str(); }

const char* lcpl_status_name(lcpl_status status) {
  switch (status) {
    case LCPL_OK: return "ok";
    case LCPL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LCPL_ERR_PARSE: return "parse error";
    case LCPL_ERR_IO: return "i/o error";
    case LCPL_ERR_VERIFICATION: return "verification failure";
    case LCPL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void lcpl_string_free(char* s) { delete[] s; }

lcpl_status lcpl_learn(const char* secret, const char* mode, int trace, char** report_json) {
  return guard([&] {
    require(secret, "secret");
    require(mode, "mode");
    const SecretString s = SecretString::parse(secret);
    const std::string m = mode;
    json j = base("learn");
    j["parameters"] = {{"secret", s.str()}, {"mode", m}, {"trace", trace != 0}};
    if (m == "classical") {
      QueryLedger ledger;
      SecretTeacher teacher(s, ledger);
      json steps = json::array();
      ClassicalObserver observer;
      if (trace) observer = [&](int q, const BitString& x) { steps.push_back({{"q", q}, {"x", x.str()}}); };
      const ClassicalResult r = learn_classical(teacher, observer);
      j["recovered"] = r.recovered.str();
      j["queries"] = {{"classical", ledger.classical_queries()}, {"quantum", ledger.quantum_oracle_uses()}, {"total", ledger.total()}};
      if (trace) j["trace"] = steps;
    } else if (m == "quantum") {
      QuantumOptions opts;
      opts.record_traces = trace != 0;
      const QuantumResult r = run_quantum_learn(s, opts);
      j["recovered"] = r.recovered.str();
      j["measured_x"] = r.measured_x.str();
      j["outcome_probability"] = r.outcome_probability;
      j["queries"] = {{"classical", r.classical_queries},
                      {"quantum", r.quantum_uses},
                      {"total", r.classical_queries + r.quantum_uses}};
      j["layout"] = {{"n", s.size()}, {"t", AlgorithmLayout::for_length(s.size()).t},
                     {"rounds", AlgorithmLayout::for_length(s.size()).rounds}};
      if (trace) {
        j["trace"] = json::array();
        for (const auto& tr : r.traces) j["trace"].push_back(trace_json(tr));
      }
    } else {
      throw InvalidArgument("mode must be 'classical' or 'quantum', got '" + m + "'");
    }
    j["correct"] = j["recovered"] == s.str();
    emit(j, report_json);
  });
}

lcpl_status lcpl_synth(const char* secret, int t, int gray_code, int decompose_h, lcpl_circuit** out,
                       char** report_json) {
  return guard([&] {
    require(secret, "secret");
    const SecretString s = SecretString::parse(secret);
    FullCircuitOptions opts;
    opts.decompose_h = decompose_h != 0;
    opts.synth.gray_code = gray_code != 0;
    if (t > 0) opts.t = t;
    FullCircuit fc = build_full_circuit(s, opts);
    json j = base("synth");
    j["parameters"] = {{"secret", s.str()}, {"t", fc.t}, {"gray_code", gray_code != 0}, {"decompose_h", decompose_h != 0}};
    j["n"] = fc.n;
    j["t"] = fc.t;
    j["circuit"] = circuit_stats(fc.circuit);
    j["oracle_blocks"] = json::array();
    for (const auto& blk : fc.oracle_blocks) {
      Circuit part(fc.circuit.width());
      for (std::size_t k = blk.first; k < blk.last; ++k) part.add(fc.circuit.gates()[k]);
      j["oracle_blocks"].push_back({{"first", blk.first}, {"last", blk.last}, {"counts", counts_json(gate_counts(part))}});
    }
    if (out) *out = new lcpl_circuit{std::move(fc.circuit)};
    emit(j, report_json);
  });
}

lcpl_status lcpl_circuit_parse_qasm(const char* text, lcpl_circuit** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new lcpl_circuit{parse_qasm(text)};
  });
}

lcpl_status lcpl_circuit_read_file(const char* path, lcpl_circuit** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new lcpl_circuit{parse_qasm(read_file(path))};
  });
}

lcpl_status lcpl_circuit_to_qasm(const lcpl_circuit* circuit, char** text) {
  return guard([&] {
    require(circuit, "circuit");
    require(text, "text");
    *text = dup_string(to_qasm(circuit->circuit));
  });
}

lcpl_status lcpl_circuit_write_file(const lcpl_circuit* circuit, const char* path) {
  return guard([&] {
    require(circuit, "circuit");
    require(path, "path");
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoFailure(std::string("cannot write '") + path + "'");
    f << to_qasm(circuit->circuit);
    f.flush();
    if (!f) throw IoFailure(std::string("write to '") + path + "' failed");
  });
}

lcpl_status lcpl_circuit_stats(const lcpl_circuit* circuit, char** report_json) {
  return guard([&] {
    require(circuit, "circuit");
    emit(circuit_stats(circuit->circuit), report_json);
  });
}

int lcpl_circuit_width(const lcpl_circuit* circuit) { return circuit ? circuit->circuit.width() : 0; }

void lcpl_circuit_free(lcpl_circuit* circuit) { delete circuit; }

lcpl_status lcpl_graph_builtin(const char* name, lcpl_graph** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = new lcpl_graph{CouplingGraph::builtin(name)};
  });
}

lcpl_status lcpl_graph_from_json(const char* text, lcpl_graph** out) {
  return guard([&] {
    require(text, "json");
    require(out, "out");
    *out = new lcpl_graph{CouplingGraph::from_json(text)};
  });
}

void lcpl_graph_free(lcpl_graph* graph) { delete graph; }

lcpl_status lcpl_transpile(const lcpl_circuit* circuit, const lcpl_graph* graph, int opt_level, lcpl_circuit** out,
                           char** report_json) {
  return guard([&] {
    require(circuit, "circuit");
    require(graph, "graph");
    if (opt_level != 0 && opt_level != 1) throw InvalidArgument("opt level must be 0 or 1");
    TranspileOptions opts;
    opts.optimize = opt_level == 1;
    TranspileResult r = transpile(circuit->circuit, graph->graph, opts);
    json j = base("transpile");
    j["parameters"] = {{"target", graph->graph.name()}, {"opt", opt_level}};
    j["input"] = circuit_stats(circuit->circuit);
    j["output"] = circuit_stats(r.circuit);
    j["report"] = pass_report_json(r.report);
    if (out) *out = new lcpl_circuit{std::move(r.circuit)};
    emit(j, report_json);
  });
}

lcpl_status lcpl_noise_builtin(const char* name, lcpl_noise** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = new lcpl_noise{NoiseProfile::builtin(name)};
  });
}

lcpl_status lcpl_noise_from_json(const char* text, lcpl_noise** out) {
  return guard([&] {
    require(text, "json");
    require(out, "out");
    *out = new lcpl_noise{NoiseProfile::from_json(text)};
  });
}

void lcpl_noise_free(lcpl_noise* noise) { delete noise; }

lcpl_status lcpl_run_noisy(const lcpl_circuit* circuit, const lcpl_noise* noise, int shots, uint64_t seed,
                           char** histogram_json) {
  return guard([&] {
    require(circuit, "circuit");
    require(noise, "noise");
    const Histogram h = run_noisy(circuit->circuit, noise->profile, shots, seed);
    json j = base("run_noisy");
    j["shots"] = shots;
    j["seed"] = seed;
    j["counts"] = h;
    emit(j, histogram_json);
  });
}

lcpl_status lcpl_estimate_asp(const char* secret, const lcpl_noise* noise, int trials, int shots, uint64_t seed,
                              char** report_json) {
  return guard([&] {
    require(secret, "secret");
    require(noise, "noise");
    const SecretString s = SecretString::parse(secret);
    const AspReport r = estimate_asp(s, noise->profile, trials, shots, seed);
    json j = base("asp");
    j["parameters"] = {{"secret", r.secret}, {"noise", noise->profile.name}, {"trials", trials},
                       {"shots", shots}, {"seed", seed}};
    j["per_trial"] = json::array();
    for (int k = 0; k < r.trials; ++k) {
      j["per_trial"].push_back({{"successes", r.successes[static_cast<std::size_t>(k)]},
                                {"probability", r.probabilities[static_cast<std::size_t>(k)]}});
    }
    j["mean"] = r.mean;
    j["stddev"] = r.stddev;
    j["device"] = r.device;
    j["mapping"] = r.mapping.physical;
    j["circuit"] = {{"counts", counts_json(r.counts)}, {"depth", r.depth}};
    emit(j, report_json);
  });
}

lcpl_status lcpl_verify(const char* suite, int max_n, char** report_json) {
  bool passed = true;
  const lcpl_status st = guard([&] {
    require(suite, "suite");
    const auto results = run_verify(suite, max_n);
    json j = base("verify");
    j["parameters"] = {{"suite", suite}, {"max_n", max_n}};
    j["suites"] = json::array();
    for (const auto& r : results) {
      passed = passed && r.passed;
      j["suites"].push_back({{"name", r.name},
                             {"passed", r.passed},
                             {"checks", r.checks},
                             {"failures", r.failures},
                             {"seconds", r.seconds}});
    }
    j["passed"] = passed;
    emit(j, report_json);
  });
  if (st == LCPL_OK && !passed) {
    g_last_error = "verification failed";
    return LCPL_ERR_VERIFICATION;
  }
  return st;
}

}  // extern "C"
