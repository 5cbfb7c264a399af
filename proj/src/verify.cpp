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


#include "lcpl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "lcpl/classical.hpp"
#include "lcpl/errors.hpp"
#include "lcpl/parallel.hpp"
#include "lcpl/quantum.hpp"
#include "lcpl/synth.hpp"
#include "lcpl/transpile.hpp"

namespace lcpl {

namespace {

constexpr std::size_t kMaxListedFailures = 8;
constexpr double kTol = 1e-9;

class Suite {
 public:
  explicit Suite(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (ok) return;
    result_.passed = false;
    if (result_.failures.size() < kMaxListedFailures) result_.failures.push_back(what);
  }

  SuiteResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  SuiteResult result_;
  std::chrono::steady_clock::time_point start_;
};

SuiteResult classical_suite(int max_n) {
  Suite suite("classical");
  for (int n = 1; n <= std::min(max_n, 12); ++n) {
    const OptimalityReport r = verify_optimality(n);
    suite.check(r.passed(), "n=" + std::to_string(n) + ": queries " + std::to_string(r.min_queries) + ".." +
                                std::to_string(r.max_queries) + ", recovered " + std::to_string(r.recovered) +
                                "/" + std::to_string(r.secrets));
  }
  return suite.finish();
}

// One quantum run checked for recovery, certainty and the ceil(n/2) count.
std::string quantum_failure(const SecretString& s) {
  const QuantumResult r = run_quantum_learn(s);
  const int n = s.size();
  const auto uses = r.quantum_uses + r.classical_queries;
  if (r.recovered.str() != s.str()) return "s=" + s.str() + " recovered " + r.recovered.str();
  if (uses != static_cast<std::uint64_t>((n + 1) / 2)) return "s=" + s.str() + " used " + std::to_string(uses);
  if (r.outcome_probability < 1.0 - kTol) return "s=" + s.str() + " outcome probability below 1";
  if (n <= 6) {
    for (int i = 1; i <= AlgorithmLayout::for_length(n).rounds; ++i) {
      try {
        certify_round(s, i);
      } catch (const CertificationError& e) {
        return "s=" + s.str() + " round " + std::to_string(i) + ": " + e.what();
      }
    }
  }
  return {};
}

SuiteResult quantum_suite(int max_n) {
  Suite suite("quantum");
  std::mt19937_64 rng(0x5eed);
  for (int n = 1; n <= std::min(max_n, 16); ++n) {
    std::vector<SecretString> secrets;
    if (n <= 10) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) secrets.emplace_back(BitString::from_index(v, n));
    } else {
      for (int k = 0; k < 64; ++k) secrets.emplace_back(BitString::from_index(rng() >> (64 - n), n));
    }
    std::vector<std::string> failures(secrets.size());
    parallel_for(secrets.size(), [&](std::uint64_t k) { failures[k] = quantum_failure(secrets[k]); });
    for (const auto& f : failures) suite.check(f.empty(), f);
  }
  return suite.finish();
}

Eigen::MatrixXcd diagonal_matrix(std::span<const std::int8_t> signs) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(signs.size()),
                                              static_cast<Eigen::Index>(signs.size()));
  for (std::size_t b = 0; b < signs.size(); ++b) d(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = signs[b];
  return d;
}

void check_synth(Suite& suite, std::span<const std::int8_t> signs, const std::string& label) {
  const Circuit c = synth_diagonal(signs);
  const double dev = phase_deviation(diagonal_matrix(signs), unitary_of(c));
  suite.check(dev <= kTol, label + ": deviation " + std::to_string(dev));
  if (signs.size() == 8) {
    const auto counts = gate_counts(c);
    suite.check(counts.at(GateKind::CX) <= 6 && counts.at(GateKind::RZ) <= 7,
                label + ": " + std::to_string(counts.at(GateKind::CX)) + " CX, " +
                    std::to_string(counts.at(GateKind::RZ)) + " RZ");
  }
}

SuiteResult synth_suite() {
  Suite suite("synth");
  for (const auto& ref : reference_diagonals()) {
    const SecretString s = SecretString::parse(ref.secret);
    suite.check(oracle_diagonal(s, ref.t) == ref.signs, std::string("diagonal of s=") + ref.secret);
    if (s.size() == 3) {
      BitString other = s.bits();
      other.flip(3);
      suite.check(oracle_diagonal(SecretString(other), ref.t) == ref.signs,
                  std::string("shared diagonal of s=") + other.str());
    }
  }
  for (int n = 2; n <= 3; ++n) {
    const int t = AlgorithmLayout::for_length(n).t;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const SecretString s(BitString::from_index(v, n));
      check_synth(suite, oracle_diagonal(s, t), "oracle s=" + s.str());
    }
  }
  // Every 3-qubit +-1 diagonal, then random ones on up to five qubits.
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    std::vector<std::int8_t> signs(8);
    for (std::size_t b = 0; b < 8; ++b) signs[b] = (mask >> b) & 1 ? -1 : 1;
    check_synth(suite, signs, "3-qubit mask " + std::to_string(mask));
  }
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 100; ++k) {
    const int m = 1 + static_cast<int>(rng() % 5);
    std::vector<std::int8_t> signs(std::size_t{1} << m);
    for (auto& v : signs) v = rng() & 1 ? -1 : 1;
    check_synth(suite, signs, "random diagonal #" + std::to_string(k));
  }
  return suite.finish();
}

SuiteResult transpile_suite() {
  Suite suite("transpile");
  const CouplingGraph device = CouplingGraph::quito();
  for (int n = 2; n <= 3; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const SecretString s(BitString::from_index(v, n));
      const TranspileResult tr = transpile(build_full_circuit(s).circuit, device);
      suite.check(tr.report.legal(), "s=" + s.str() + ": illegal transpiled circuit");
      const RecoveryCheck rc = check_transpiled_recovery(tr.circuit, tr.report.mapping, s);
      suite.check(rc.recovered && rc.probability >= 1.0 - kTol, "s=" + s.str() + ": measured " + rc.measured_x);
      if (s.str() == "00") {
        const auto cx = tr.report.final_counts.at(GateKind::CX);
        suite.check(cx <= 11 && tr.report.final_depth <= 20,
                    "s=00: " + std::to_string(cx) + " CX, depth " + std::to_string(tr.report.final_depth));
      }
    }
  }
  return suite.finish();
}

std::vector<std::int8_t> signs_of(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

const std::vector<ReferenceDiagonal>& reference_diagonals() {
  static const std::vector<ReferenceDiagonal> table = [] {
    const auto p8 = {1, 1, 1, 1, 1, 1, 1, 1};
    auto cat = [](std::initializer_list<int> a, std::initializer_list<int> b) {
      std::vector<std::int8_t> out(a.begin(), a.end());
      out.insert(out.end(), b.begin(), b.end());
      return out;
    };
    return std::vector<ReferenceDiagonal>{
        {"00", 1, signs_of({-1, -1, -1, 1, 1, 1, 1, 1})},
        {"01", 1, signs_of({-1, 1, -1, -1, 1, 1, 1, 1})},
        {"10", 1, signs_of({1, 1, 1, 1, -1, -1, -1, 1})},
        {"11", 1, signs_of({1, 1, 1, 1, -1, 1, -1, -1})},
        {"000", 1, cat({-1, -1, -1, -1, -1, 1, -1, 1}, p8)},
        {"010", 1, cat({-1, 1, -1, 1, -1, -1, -1, -1}, p8)},
        {"100", 1, cat(p8, {-1, -1, -1, -1, -1, 1, -1, 1})},
        {"110", 1, cat(p8, {-1, 1, -1, 1, -1, -1, -1, -1})},
    };
  }();
  return table;
}

RecoveryCheck check_transpiled_recovery(const Circuit& physical, const QubitMapping& mapping,
                                        const SecretString& s) {
  RecoveryCheck out;
  Statevector state(physical.width());
  state.apply(physical);
  std::uint64_t best = 0;
  for (std::uint64_t b = 1; b < state.dim(); ++b) {
    if (state.probability(b) > state.probability(best)) best = b;
  }
  out.probability = state.probability(best);
  out.measured_x = logical_bits(index_to_bits(best, physical.width()), mapping, 1, s.size());
  BitString x = BitString::parse(out.measured_x);
  if (s.size() % 2 == 1) {
    QueryLedger ledger;
    SecretTeacher teacher(s, ledger);
    x = resolve_last_bit(x, teacher);
  }
  out.recovered = x.str() == s.str();
  return out;
}

std::vector<SuiteResult> run_verify(std::string_view suite, int max_n) {
  if (max_n < 1) throw InvalidArgument("--max-n must be at least 1");
  std::vector<SuiteResult> out;
  const bool all = suite == "all";
  if (!all && std::find(kVerifySuites.begin(), kVerifySuites.end(), suite) == kVerifySuites.end()) {
    throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
  }
  if (all || suite == "classical") out.push_back(classical_suite(max_n));
  if (all || suite == "quantum") out.push_back(quantum_suite(max_n));
  if (all || suite == "synth") out.push_back(synth_suite());
  if (all || suite == "transpile") out.push_back(transpile_suite());
  return out;
}

}  // namespace lcpl
