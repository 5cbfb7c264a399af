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

#include "lcpl/quantum.hpp"

#include <bit>
#include <cmath>

#include "lcpl/errors.hpp"

namespace lcpl {

namespace {

constexpr double kTol = 1e-9;

int ceil_log2(int v) { return v <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned>(v - 1))); }

std::uint64_t register_index(const BitString& x, int q, int t) {
  return (x.to_index() << t) | static_cast<std::uint64_t>(q);
}

/// x = prefix . k . 0^{n - 2i}
BitString candidate(const BitString& prefix, int k, int n) {
  BitString x = BitString::zeros(n);
  for (int j = 1; j <= prefix.size(); ++j) x.set(j, prefix.bit(j));
  x.set(prefix.size() + 1, (k >> 1) & 1);
  x.set(prefix.size() + 2, k & 1);
  return x;
}

void run_round(Statevector& state, const RoundCircuit& rc, QueryLedger& ledger, RoundTrace* trace) {
  state.apply(rc.prepare);
  if (trace) trace->psi1 = state;
  rc.oracle->apply(state, ledger);
  if (trace) trace->psi2 = state;
  state.apply_two_qubit(rc.r_high, rc.r_low, r_operator());
  if (trace) trace->psi3 = state;
}

RoundTrace make_trace(const SecretString& s, const AlgorithmLayout& layout, int round) {
  RoundTrace tr;
  tr.round = round;
  tr.q_prev = q_value(round - 1);
  tr.q_cur = q_value(round);
  tr.prefix = s.bits().prefix(2 * round - 2);
  for (int k = 0; k < 4; ++k) tr.candidates[static_cast<std::size_t>(k)] = candidate(tr.prefix, k, layout.n);
  return tr;
}

void fill_alphas(RoundTrace& tr, int t) {
  for (int k = 0; k < 4; ++k) {
    auto idx = register_index(tr.candidates[static_cast<std::size_t>(k)], tr.q_cur, t);
    tr.alphas[static_cast<std::size_t>(k)] = (*tr.psi2)[idx];
  }
}

}  // namespace

AlgorithmLayout AlgorithmLayout::for_length(int n) {
  if (n < 1) throw InvalidArgument("secret length must be >= 1");
  AlgorithmLayout l;
  l.n = n;
  l.odd = (n % 2) == 1;
  if (n == 1) {
    l.t = 0;
    l.rounds = 0;
    l.uses_classical_tail = true;
  } else if (l.odd) {
    l.t = ceil_log2(n - 1);
    l.rounds = (n - 1) / 2;
    l.uses_classical_tail = true;
  } else {
    l.t = ceil_log2(n);
    l.rounds = n / 2;
  }
  if (l.width() > Statevector::kMaxQubits) {
    throw InvalidArgument("n = " + std::to_string(n) + " needs " + std::to_string(l.width()) +
                          " qubits, more than " + std::to_string(Statevector::kMaxQubits));
  }
  return l;
}

int q_value(int round) { return round <= 0 ? 0 : 2 * round - 1; }

Eigen::Matrix4cd r_operator() {
  Eigen::Matrix4cd r;
  r.setConstant(0.5);
  r.diagonal().setConstant(-0.5);
  return r;
}

Circuit q_shift(int round, int t) {
  if (round < 1 || t < 1 || q_value(round) >= (1 << t)) {
    throw InvalidArgument("q_shift: round " + std::to_string(round) + " does not fit a " +
                          std::to_string(t) + "-qubit register");
  }
  Circuit c(t);
  const int mask = q_value(round - 1) ^ q_value(round);
  for (int qubit = 1; qubit <= t; ++qubit) {
    if (mask & (1 << (t - qubit))) c.add(Gate::x(qubit));
  }
  return c;
}

void RoundCircuit::apply(Statevector& state, QueryLedger& ledger) const {
  run_round(state, *this, ledger, nullptr);
}

RoundCircuit build_round_circuit(int round, const AlgorithmLayout& layout,
                                 std::shared_ptr<const PhaseOracle> oracle) {
  if (round < 1 || round > layout.rounds) {
    throw InvalidArgument("round " + std::to_string(round) + " outside 1.." +
                          std::to_string(layout.rounds));
  }
  if (!oracle || oracle->num_qubits() != layout.width()) {
    throw InvalidArgument("oracle width does not match the register layout");
  }
  RoundCircuit rc;
  rc.round = round;
  rc.r_high = 2 * round - 1;
  rc.r_low = 2 * round;
  rc.prepare = Circuit(layout.width());
  rc.prepare.add(Gate::h(rc.r_high)).add(Gate::h(rc.r_low));
  std::vector<int> q_map(static_cast<std::size_t>(layout.t));
  for (int k = 0; k < layout.t; ++k) q_map[static_cast<std::size_t>(k)] = layout.q_offset() + k + 1;
  rc.prepare.append_mapped(q_shift(round, layout.t), q_map);
  rc.oracle = std::move(oracle);
  return rc;
}

std::string to_string(CertStage stage) {
  switch (stage) {
    case CertStage::Input: return "input";
    case CertStage::Superposition: return "superposition";
    case CertStage::PhasePattern: return "phase-pattern";
    case CertStage::Output: return "output";
  }
  return "?";
}

RoundTrace certify_round(const SecretString& s, int round) {
  const auto layout = AlgorithmLayout::for_length(s.size());
  auto oracle = std::make_shared<const PhaseOracle>(s, layout.t);
  if (round < 1 || round > layout.rounds) {
    throw InvalidArgument("certify_round: round " + std::to_string(round) + " outside 1.." +
                          std::to_string(layout.rounds));
  }
  QueryLedger ledger;
  Statevector state(layout.width());
  for (int i = 1; i < round; ++i) build_round_circuit(i, layout, oracle).apply(state, ledger);

  RoundTrace tr = make_trace(s, layout, round);
  const int t = layout.t;
  const auto check_only = [&](const Statevector& st, CertStage stage,
                              const std::array<std::uint64_t, 4>& where,
                              const std::array<Complex, 4>& expect, int count) {
    for (std::size_t b = 0; b < st.dim(); ++b) {
      Complex want = 0.0;
      for (int k = 0; k < count; ++k) {
        if (where[static_cast<std::size_t>(k)] == b) want = expect[static_cast<std::size_t>(k)];
      }
      if (std::abs(st[b] - want) > kTol) {
        throw CertificationError(stage, "amplitude of |" + index_to_bits(b, st.num_qubits()) +
                                            "> deviates from expected value");
      }
    }
  };

  // Entering state: |prefix 00 0^{n-2i}>|q(i-1)>.
  const BitString entry = candidate(tr.prefix, 0, layout.n);
  check_only(state, CertStage::Input, {register_index(entry, tr.q_prev, t), 0, 0, 0}, {1.0, 0, 0, 0}, 1);

  run_round(state, build_round_circuit(round, layout, oracle), ledger, &tr);
  fill_alphas(tr, t);

  std::array<std::uint64_t, 4> where{};
  for (std::size_t k = 0; k < 4; ++k) where[k] = register_index(tr.candidates[k], tr.q_cur, t);
  check_only(*tr.psi1, CertStage::Superposition, where, {0.5, 0.5, 0.5, 0.5}, 4);

  const int hit = s.bit(2 * round - 1) * 2 + s.bit(2 * round);
  std::array<Complex, 4> pattern{0.5, 0.5, 0.5, 0.5};
  pattern[static_cast<std::size_t>(hit)] = -0.5;
  check_only(*tr.psi2, CertStage::PhasePattern, where, pattern, 4);

  check_only(*tr.psi3, CertStage::Output, {where[static_cast<std::size_t>(hit)], 0, 0, 0}, {1.0, 0, 0, 0}, 1);
  return tr;
}

BitString resolve_last_bit(const BitString& measured, Teacher& teacher) {
  const int n = measured.size();
  const int answer = teacher.ask(Query{measured, n - 1});
  if (answer != 0 && answer != 1) {
    throw ProtocolError("teacher answered " + std::to_string(answer) + " to the final query");
  }
  BitString out = measured;
  if (answer == 0) out.flip(n);
  return out;
}

QuantumResult run_quantum_learn(const SecretString& s, const QuantumOptions& options) {
  const auto layout = AlgorithmLayout::for_length(s.size());
  QueryLedger ledger;
  QuantumResult res;

  if (layout.rounds == 0) {
    res.measured_x = BitString::zeros(layout.n);
  } else {
    auto oracle = std::make_shared<const PhaseOracle>(s, layout.t);
    Statevector state(layout.width());
    for (int i = 1; i <= layout.rounds; ++i) {
      const auto rc = build_round_circuit(i, layout, oracle);
      if (options.record_traces) {
        RoundTrace tr = make_trace(s, layout, i);
        run_round(state, rc, ledger, &tr);
        fill_alphas(tr, layout.t);
        res.traces.push_back(std::move(tr));
      } else {
        rc.apply(state, ledger);
      }
    }
    auto outcome = deterministic_outcome(state);
    if (!outcome) throw std::logic_error("final learner state is not a basis state");
    res.outcome_probability = state.probability(*outcome);
    res.measured_x = BitString::from_index(*outcome >> layout.t, layout.n);
  }

  res.recovered = res.measured_x;
  if (layout.uses_classical_tail) {
    SecretTeacher teacher(s, ledger);
    res.recovered = resolve_last_bit(res.measured_x, teacher);
  }
  res.quantum_uses = ledger.quantum_oracle_uses();
  res.classical_queries = ledger.classical_queries();
  return res;
}

}  // namespace lcpl
