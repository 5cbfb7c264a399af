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


// lcplearn: command-line driver over the lcpl C API. JSON reports go to
// stdout, a short human summary to stderr.
//
// Exit codes: 0 success, 1 verification or internal failure, 2 usage or
// input error (bad flags, unreadable or malformed files).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcpl/lcpl.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Thrown to leave a command with an exit code after printing `message`.
struct Exit {
  int code;
};

struct Free {
  void operator()(lcpl_circuit* p) const { lcpl_circuit_free(p); }
  void operator()(lcpl_graph* p) const { lcpl_graph_free(p); }
  void operator()(lcpl_noise* p) const { lcpl_noise_free(p); }
  void operator()(char* p) const { lcpl_string_free(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Free>;

int exit_code_for(lcpl_status st) {
  switch (st) {
    case LCPL_OK: return kExitOk;
    case LCPL_ERR_INVALID_ARGUMENT:
    case LCPL_ERR_PARSE:
    case LCPL_ERR_IO: return kExitUsage;
    case LCPL_ERR_VERIFICATION:
    case LCPL_ERR_INTERNAL: break;
  }
  return kExitFailure;
}

void check(lcpl_status st, const std::string& context) {
  if (st == LCPL_OK) return;
  std::cerr << "lcplearn: " << context << ": " << lcpl_last_error() << " (" << lcpl_status_name(st) << ")\n";
  throw Exit{exit_code_for(st)};
}

json take_json(char* raw) {
  Owned<char> owned(raw);
  return json::parse(owned.get());
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

bool is_binary(const std::string& s) { return !s.empty() && s.find_first_not_of("01") == std::string::npos; }

const auto kBinary = CLI::Validator(
    [](std::string& s) { return is_binary(s) ? std::string() : "'" + s + "' is not a non-empty 0/1 string"; },
    "BITS");

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "lcplearn: cannot read '" << path << "'\n";
    throw Exit{kExitUsage};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool names_file(const std::string& arg) {
  return arg.ends_with(".json") || std::filesystem::is_regular_file(arg);
}

std::string counts_line(const json& counts) {
  std::string out;
  for (const char* g : {"cx", "rz", "sx", "x", "h", "z"}) {
    const auto n = counts.value(g, 0);
    if (n == 0 && (std::string(g) == "h" || std::string(g) == "z")) continue;
    if (!out.empty()) out += ", ";
    out += std::to_string(n) + " " + g;
  }
  return out;
}

// --- learn ----------------------------------------------------------------

struct LearnArgs {
  std::string secret;
  std::string mode = "quantum";
  bool trace = false;
};

int run_learn(const LearnArgs& a) {
  char* raw = nullptr;
  check(lcpl_learn(a.secret.c_str(), a.mode.c_str(), a.trace ? 1 : 0, &raw), "learn");
  json j = take_json(raw);
  print(j);
  std::cerr << a.mode << ": recovered " << j["recovered"].get<std::string>() << " with "
            << j["queries"]["total"].get<int>() << " queries\n";
  return j["correct"].get<bool>() ? kExitOk : kExitFailure;
}

// --- synth ----------------------------------------------------------------

struct SynthArgs {
  std::string secret;
  int t = 0;
  bool no_gray = false;
  bool decompose_h = false;
  std::string out;
};

int run_synth(const SynthArgs& a) {
  lcpl_circuit* c = nullptr;
  char* raw = nullptr;
  check(lcpl_synth(a.secret.c_str(), a.t, a.no_gray ? 0 : 1, a.decompose_h ? 1 : 0, &c, &raw), "synth");
  Owned<lcpl_circuit> circuit(c);
  json j = take_json(raw);
  check(lcpl_circuit_write_file(circuit.get(), a.out.c_str()), "synth");
  j["out"] = a.out;
  print(j);
  std::cerr << "circuit: " << j["circuit"]["width"].get<int>() << " qubits, "
            << counts_line(j["circuit"]["counts"]) << ", depth " << j["circuit"]["depth"].get<int>() << "\n";
  for (const auto& blk : j["oracle_blocks"]) {
    std::cerr << "oracle block: " << blk["counts"]["cx"].get<int>() << " cx, " << blk["counts"]["rz"].get<int>()
              << " rz\n";
  }
  std::cerr << "wrote " << a.out << "\n";
  return kExitOk;
}

// --- transpile ------------------------------------------------------------

struct TranspileArgs {
  std::string in;
  std::string target;
  int opt = 1;
  std::string out;
};

Owned<lcpl_graph> load_graph(const std::string& target) {
  lcpl_graph* g = nullptr;
  if (names_file(target)) {
    check(lcpl_graph_from_json(read_text(target).c_str(), &g), "target '" + target + "'");
  } else {
    check(lcpl_graph_builtin(target.c_str(), &g), "target");
  }
  return Owned<lcpl_graph>(g);
}

// Published transpiled budget for the n = 2 (3 qubits) and n = 3 (4 qubits)
// learner circuits, with the deltas of this run.
json reference_budget(const json& output) {
  const json budget{{"cx", 9}, {"rz", 10}, {"sx", 4}, {"x", 2}, {"depth", 15}};
  json delta;
  for (const char* g : {"cx", "rz", "sx", "x"}) delta[g] = output["counts"].value(g, 0) - budget[g].get<int>();
  delta["depth"] = output["depth"].get<int>() - 15;
  return json{{"budget", budget}, {"delta", delta}};
}

int run_transpile(const TranspileArgs& a) {
  lcpl_circuit* c = nullptr;
  check(lcpl_circuit_read_file(a.in.c_str(), &c), "reading '" + a.in + "'");
  Owned<lcpl_circuit> input(c);
  Owned<lcpl_graph> graph = load_graph(a.target);

  lcpl_circuit* t = nullptr;
  char* raw = nullptr;
  check(lcpl_transpile(input.get(), graph.get(), a.opt, &t, &raw), "transpile");
  Owned<lcpl_circuit> output(t);
  json j = take_json(raw);
  check(lcpl_circuit_write_file(output.get(), a.out.c_str()), "transpile");
  j["parameters"]["in"] = a.in;
  j["out"] = a.out;
  const int width = j["input"]["width"].get<int>();
  if (width == 3 || width == 4) j["reference"] = reference_budget(j["output"]);
  print(j);

  std::cerr << "transpiled onto " << j["parameters"]["target"].get<std::string>() << ": "
            << counts_line(j["output"]["counts"]) << ", depth " << j["output"]["depth"].get<int>()
            << (j["report"]["legal"].get<bool>() ? "" : " (NOT legal)") << "\n";
  if (j.contains("reference")) {
    const auto& d = j["reference"]["delta"];
    std::cerr << "vs reference 9 cx / 10 rz / 4 sx / 2 x / depth 15: " << std::showpos << d["cx"].get<int>()
              << " cx, " << d["rz"].get<int>() << " rz, " << d["sx"].get<int>() << " sx, " << d["x"].get<int>()
              << " x, depth " << d["depth"].get<int>() << std::noshowpos << "\n";
  }
  return j["report"]["legal"].get<bool>() ? kExitOk : kExitFailure;
}

// --- asp ------------------------------------------------------------------

struct AspArgs {
  std::string secret;
  std::string noise = "default";
  int trials = 5;
  int shots = 8192;
  std::uint64_t seed = 1;
};

int run_asp(const AspArgs& a) {
  lcpl_noise* n = nullptr;
  if (names_file(a.noise)) {
    check(lcpl_noise_from_json(read_text(a.noise).c_str(), &n), "noise '" + a.noise + "'");
  } else {
    check(lcpl_noise_builtin(a.noise.c_str(), &n), "noise");
  }
  Owned<lcpl_noise> noise(n);
  char* raw = nullptr;
  check(lcpl_estimate_asp(a.secret.c_str(), noise.get(), a.trials, a.shots, a.seed, &raw), "asp");
  json j = take_json(raw);
  print(j);
  char line[128];
  std::snprintf(line, sizeof line, "ASP %.4f +- %.4f over %d x %d shots\n", j["mean"].get<double>(),
                j["stddev"].get<double>(), a.trials, a.shots);
  std::cerr << "s=" << a.secret << " noise=" << j["parameters"]["noise"].get<std::string>() << ": " << line;
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int max_n = 8;
};

int run_verify(const VerifyArgs& a) {
  char* raw = nullptr;
  const lcpl_status st = lcpl_verify(a.suite.c_str(), a.max_n, &raw);
  if (st != LCPL_ERR_VERIFICATION) check(st, "verify");
  json j = take_json(raw);
  print(j);
  std::cerr << "suite       checks  result  seconds\n";
  for (const auto& s : j["suites"]) {
    char line[96];
    std::snprintf(line, sizeof line, "%-10s %7llu  %-6s  %7.2f\n", s["name"].get<std::string>().c_str(),
                  static_cast<unsigned long long>(s["checks"].get<std::uint64_t>()),
                  s["passed"].get<bool>() ? "pass" : "FAIL", s["seconds"].get<double>());
    std::cerr << line;
    for (const auto& f : s["failures"]) std::cerr << "    " << f.get<std::string>() << "\n";
  }
  return j["passed"].get<bool>() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learn a hidden bit string from longest-common-prefix queries, classically or with a quantum circuit."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lcpl_version()));

  LearnArgs learn;
  auto* learn_cmd = app.add_subcommand("learn", "Recover a secret with the classical or quantum learner");
  learn_cmd->add_option("--secret", learn.secret, "Secret bit string")->required()->check(kBinary);
  learn_cmd->add_option("--mode", learn.mode, "classical or quantum")
      ->check(CLI::IsMember({"classical", "quantum"}))
      ->capture_default_str();
  learn_cmd->add_flag("--trace", learn.trace, "Include per-step snapshots");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write the full gate-level learner circuit");
  synth_cmd->add_option("--secret", synth.secret, "Secret bit string (length >= 2)")->required()->check(kBinary);
  synth_cmd->add_option("--t", synth.t, "q-register width (default: smallest that fits)")->check(CLI::PositiveNumber);
  synth_cmd->add_flag("--no-gray", synth.no_gray, "One CX ladder per parity term instead of Gray-code order");
  synth_cmd->add_flag("--decompose-h", synth.decompose_h, "Write H as RZ(pi/2) SX RZ(pi/2)");
  synth_cmd->add_option("--out", synth.out, "Output circuit file")->required();

  TranspileArgs tr;
  auto* tr_cmd = app.add_subcommand("transpile", "Map, route, rewrite and optimize a circuit for a device");
  tr_cmd->add_option("--in", tr.in, "Input circuit file")->required();
  tr_cmd->add_option("--target", tr.target, "linear3, quito, linearN or a coupling-graph JSON file")->required();
  tr_cmd->add_option("--opt", tr.opt, "0: no optimization, 1: optimize")->check(CLI::IsMember({0, 1}))->capture_default_str();
  tr_cmd->add_option("--out", tr.out, "Output circuit file")->required();

  AspArgs asp;
  auto* asp_cmd = app.add_subcommand("asp", "Estimate the success probability under a noise profile");
  asp_cmd->add_option("--secret", asp.secret, "Secret bit string (length >= 2)")->required()->check(kBinary);
  asp_cmd->add_option("--noise", asp.noise, "default (noiseless), quito, quito-average or a profile JSON file")
      ->capture_default_str();
  asp_cmd->add_option("--trials", asp.trials, "Independent batches")->check(CLI::PositiveNumber)->capture_default_str();
  asp_cmd->add_option("--shots", asp.shots, "Shots per batch")->check(CLI::PositiveNumber)->capture_default_str();
  asp_cmd->add_option("--seed", asp.seed, "Random seed")->capture_default_str();

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run the built-in verification suites");
  ver_cmd->add_option("--suite", ver.suite, "all, classical, quantum, synth or transpile")
      ->check(CLI::IsMember({"all", "classical", "quantum", "synth", "transpile"}))
      ->capture_default_str();
  ver_cmd->add_option("--max-n", ver.max_n, "Largest secret length for the exhaustive sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*learn_cmd) return run_learn(learn);
    if (*synth_cmd) return run_synth(synth);
    if (*tr_cmd) return run_transpile(tr);
    if (*asp_cmd) return run_asp(asp);
    if (*ver_cmd) return run_verify(ver);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "lcplearn: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
