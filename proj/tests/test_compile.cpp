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


#include <gtest/gtest.h>

#include <random>

#include "lcpl/errors.hpp"
#include "lcpl/optimize.hpp"
#include "lcpl/quantum.hpp"
#include "lcpl/synth.hpp"
#include "lcpl/transpile.hpp"
#include "lcpl/verify.hpp"
#include "reference.hpp"

namespace lcpl {
namespace {

std::vector<std::int8_t> random_signs(std::mt19937_64& rng, int m) {
  std::vector<std::int8_t> s(std::size_t{1} << m);
  for (auto& v : s) v = rng() & 1 ? -1 : 1;
  return s;
}

TEST(Walsh, ReconstructsPhases) {
  std::mt19937_64 rng(1);
  std::vector<double> phases(16);
  for (auto& p : phases) p = std::uniform_real_distribution<double>(-3, 3)(rng);
  const auto spectrum = walsh_decompose_phases(phases);
  for (std::uint64_t b = 0; b < 16; ++b) EXPECT_NEAR(spectrum.reconstruct(b), phases[b], 1e-12);
}

TEST(Walsh, RejectsNonSigns) {
  const std::vector<std::int8_t> bad{1, 0};
  EXPECT_THROW(walsh_decompose(bad), InvalidArgument);
  const std::vector<std::int8_t> odd{1, 1, 1};
  EXPECT_THROW(walsh_decompose(odd), InvalidArgument);
}

TEST(Synth, DiagonalEquivalenceAndBudget) {
  std::mt19937_64 rng(21);
  for (int m = 1; m <= 5; ++m) {
    for (int it = 0; it < 20; ++it) {
      const auto signs = random_signs(rng, m);
      for (bool gray : {true, false}) {
        SynthOptions opt;
        opt.gray_code = gray;
        const Circuit c = synth_diagonal(signs, opt);
        EXPECT_LT(ref::phase_distance(ref::diagonal(signs), ref::unitary(c)), 1e-9);
        if (gray) {
          const auto counts = gate_counts(c);
          EXPECT_LE(counts.at(GateKind::CX), (std::size_t{1} << m) - 2);
          EXPECT_LE(counts.at(GateKind::RZ), (std::size_t{1} << m) - 1);
        }
      }
    }
  }
}

TEST(Synth, ThreeQubitBudgetExhaustive) {
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    std::vector<std::int8_t> signs(8);
    for (std::size_t b = 0; b < 8; ++b) signs[b] = (mask >> b) & 1 ? -1 : 1;
    const auto counts = gate_counts(synth_diagonal(signs));
    EXPECT_LE(counts.at(GateKind::CX), 6u);
    EXPECT_LE(counts.at(GateKind::RZ), 7u);
  }
}

TEST(Synth, IdentityDiagonalIsEmpty) {
  const std::vector<std::int8_t> ones(8, 1);
  EXPECT_TRUE(synth_diagonal(ones).empty());
  const std::vector<std::int8_t> minus(8, -1);  // global phase only
  EXPECT_TRUE(synth_diagonal(minus).empty());
}

TEST(Synth, RAndHDecompositions) {
  Eigen::MatrixXcd r = r_operator();
  EXPECT_LT(ref::phase_distance(r, ref::unitary(synth_R())), 1e-12);
  EXPECT_LT(ref::phase_distance(ref::gate_matrix(Gate::h(1)), ref::unitary(decompose_H())), 1e-12);
}

TEST(Synth, FullCircuitRecoversSecret) {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const SecretString s(BitString::from_index(v, n));
      const FullCircuit fc = build_full_circuit(s);
      EXPECT_EQ(fc.oracle_blocks.size(), static_cast<std::size_t>(AlgorithmLayout::for_length(n).rounds));
      const Eigen::VectorXcd out = ref::apply(fc.circuit, ref::zero_state(fc.circuit.width()));
      Eigen::Index best = 0;
      out.cwiseAbs2().maxCoeff(&best);
      EXPECT_GE(std::norm(out(best)), 1.0 - 1e-9);
      const std::string x = ref::bits_of(static_cast<std::uint64_t>(best), fc.circuit.width()).substr(0, static_cast<std::size_t>(n));
      const std::size_t checked = n % 2 ? n - 1 : n;
      EXPECT_EQ(x.substr(0, checked), s.str().substr(0, checked));
    }
  }
}

TEST(Synth, FullCircuitOptions) {
  const SecretString s = SecretString::parse("00");
  FullCircuitOptions opt;
  opt.decompose_h = true;
  EXPECT_EQ(gate_counts(build_full_circuit(s, opt).circuit).at(GateKind::H), 0u);
  opt.t = 2;
  EXPECT_EQ(build_full_circuit(s, opt).circuit.width(), 4);
  EXPECT_THROW(build_full_circuit(SecretString::parse("1")), InvalidArgument);
  FullCircuitOptions small;
  small.t = 1;
  EXPECT_THROW(build_full_circuit(SecretString::parse("0000"), small), InvalidArgument);
}

TEST(Coupling, Builtins) {
  const auto q = CouplingGraph::quito();
  EXPECT_EQ(q.num_qubits(), 5);
  EXPECT_TRUE(q.adjacent(1, 3));
  EXPECT_FALSE(q.adjacent(0, 2));
  EXPECT_EQ(q.distance(0, 4), 3);
  EXPECT_EQ(q.shortest_path(0, 4), (std::vector<int>{0, 1, 3, 4}));
  EXPECT_EQ(CouplingGraph::builtin("linear3").num_qubits(), 3);
  EXPECT_THROW(CouplingGraph::builtin("ring5"), InvalidArgument);
}

TEST(Coupling, Json) {
  const auto g = CouplingGraph::from_json(R"({"qubits": 3, "edges": [[0, 2], [2, 1]]})");
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_EQ(CouplingGraph::from_json(g.to_json()).edges(), g.edges());
  EXPECT_THROW(CouplingGraph::from_json(R"({"qubits": 3, "edges": [[0, 1]]})"), InvalidArgument);
  EXPECT_THROW(CouplingGraph::from_json(R"({"qubits": 2, "edges": [[0, 0]]})"), InvalidArgument);
  EXPECT_THROW(CouplingGraph::from_json("[1,2"), InvalidArgument);
}

TEST(Routing, BridgeIdentityIsExact) {
  const auto g = CouplingGraph::linear(4);
  for (int a = 0; a < 4; ++a) {
    for (int c = 0; c < 4; ++c) {
      if (a == c) continue;
      const Circuit routed = route_cnot(a, c, g);
      EXPECT_TRUE(cx_on_coupling_edges(routed, g));
      Circuit direct(4);
      direct.add(Gate::cx(a + 1, c + 1));
      EXPECT_LT(ref::phase_distance(ref::unitary(direct), ref::unitary(routed)), 1e-12);
    }
  }
  EXPECT_EQ(route_cnot(0, 2, g).size(), 4u);
  EXPECT_EQ(route_cnot(0, 1, g).size(), 1u);
}

TEST(Routing, BothBridgeOrdersAreExact) {
  const auto g = CouplingGraph::quito();
  Circuit c(5);
  c.add(Gate::cx(1, 3)).add(Gate::cx(5, 1)).add(Gate::cx(3, 5));
  const auto mapping = QubitMapping::identity(5);
  for (int bits = 0; bits < 8; ++bits) {
    std::vector<bool> orient{bool(bits & 1), bool(bits & 2), bool(bits & 4)};
    const Circuit routed = map_and_route(c, g, mapping, orient);
    EXPECT_TRUE(cx_on_coupling_edges(routed, g));
    EXPECT_LT(ref::phase_distance(ref::unitary(c), ref::unitary(routed)), 1e-12);
  }
}

TEST(Optimize, CancelsAndMerges) {
  Circuit c(2);
  c.add(Gate::rz(1, 0.5)).add(Gate::cx(1, 2)).add(Gate::rz(1, 0.25)).add(Gate::cx(1, 2)).add(Gate::x(2)).add(Gate::x(2));
  const auto r = optimize(c);
  EXPECT_EQ(r.circuit.size(), 1u);
  EXPECT_EQ(r.circuit.gates()[0], Gate::rz(1, 0.75));
  Circuit s(1);
  s.add(Gate::sx(1)).add(Gate::sx(1));
  EXPECT_EQ(optimize(s).circuit.gates(), (std::vector<Gate>{Gate::x(1)}));
  Circuit z(1);
  z.add(Gate::rz(1, kPi)).add(Gate::rz(1, kPi));
  EXPECT_TRUE(optimize(z).circuit.empty());
}

TEST(Optimize, PhaseCrossesDiagonalSandwich) {
  Circuit c(2);
  c.add(Gate::rz(2, 0.3)).add(Gate::cx(1, 2)).add(Gate::rz(2, 0.4)).add(Gate::cx(1, 2)).add(Gate::rz(2, 0.2));
  const auto r = optimize(c);
  EXPECT_EQ(gate_counts(r.circuit).at(GateKind::RZ), 2u);
  EXPECT_LT(ref::phase_distance(ref::unitary(c), ref::unitary(r.circuit)), 1e-12);
}

TEST(Optimize, SoundOnRandomCircuits) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 150; ++it) {
    const Circuit c = ref::random_circuit(rng, 4, 60);
    const auto r = optimize(c);
    EXPECT_LE(r.circuit.size(), c.size());
    EXPECT_LT(ref::phase_distance(ref::unitary(c), ref::unitary(r.circuit)), 1e-9);
    EXPECT_EQ(optimize(r.circuit).circuit, r.circuit);
    EXPECT_TRUE(r.report.flags.at("converged"));
  }
}

TEST(Optimize, CommutationRules) {
  EXPECT_TRUE(gates_commute(Gate::rz(1, 0.2), Gate::cx(1, 2)));
  EXPECT_FALSE(gates_commute(Gate::rz(2, 0.2), Gate::cx(1, 2)));
  EXPECT_TRUE(gates_commute(Gate::x(2), Gate::cx(1, 2)));
  EXPECT_TRUE(gates_commute(Gate::cx(1, 2), Gate::cx(1, 3)));
  EXPECT_FALSE(gates_commute(Gate::cx(1, 2), Gate::cx(2, 3)));
}

TEST(Transpile, RewriteToDevice) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 40; ++it) {
    const Circuit c = ref::random_circuit(rng, 3, 30);
    const Circuit d = rewrite_to_device(c);
    EXPECT_TRUE(uses_device_gates_only(d));
    EXPECT_LT(ref::phase_distance(ref::unitary(c), ref::unitary(d)), 1e-9);
  }
}

TEST(Transpile, ResynthesisKeepsDiagonal) {
  std::mt19937_64 rng(6);
  const auto g = CouplingGraph::linear(3);
  for (int it = 0; it < 60; ++it) {
    std::vector<double> phases(8);
    for (auto& p : phases) p = std::uniform_real_distribution<double>(-3, 3)(rng);
    const Circuit c = synth_phase_diagonal(phases);
    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    const QubitMapping m{perm};
    const Circuit r = resynthesize_diagonals(c, g, m);
    EXPECT_LT(ref::phase_distance(ref::unitary(c), ref::unitary(r)), 1e-9);
    for (const auto& gate : r.gates()) {
      if (gate.kind == GateKind::CX) EXPECT_TRUE(g.adjacent(m.to_physical(gate.qubit), m.to_physical(gate.target)));
    }
  }
}

TEST(Transpile, ResynthesisLeavesOtherRunsAlone) {
  Circuit c(3);
  c.add(Gate::cx(1, 2)).add(Gate::rz(2, 0.3));  // network is not the identity
  EXPECT_EQ(resynthesize_diagonals(c, CouplingGraph::linear(3), QubitMapping::identity(3)), c);
}

// The transpiled circuit acts on the device; compare it against the
// logical circuit placed onto the mapped physical qubits.
Circuit place(const Circuit& logical, const QubitMapping& m, int device_qubits) {
  Circuit out(device_qubits);
  std::vector<int> map;
  for (int p : m.physical) map.push_back(p + 1);
  out.append_mapped(logical, map);
  return out;
}

TEST(Transpile, LearnerCircuitsOnQuito) {
  const auto device = CouplingGraph::quito();
  for (const char* secret : {"00", "01", "10", "11", "000", "011", "101", "110"}) {
    const SecretString s = SecretString::parse(secret);
    const FullCircuit fc = build_full_circuit(s);
    const auto tr = transpile(fc.circuit, device);
    EXPECT_TRUE(tr.report.legal()) << secret;
    EXPECT_LT(ref::phase_distance(ref::unitary(place(fc.circuit, tr.report.mapping, 5)), ref::unitary(tr.circuit)),
              1e-9);
    EXPECT_LE(tr.report.final_counts.at(GateKind::CX), 11u);
    EXPECT_LE(tr.report.final_depth, 20);
    EXPECT_TRUE(check_transpiled_recovery(tr.circuit, tr.report.mapping, s).recovered);
  }
}

TEST(Transpile, OptimizationNeverAddsCx) {
  const auto device = CouplingGraph::quito();
  std::mt19937_64 rng(12);
  for (int it = 0; it < 20; ++it) {
    const Circuit c = ref::random_circuit(rng, 4, 30);
    TranspileOptions off;
    off.optimize = false;
    const auto a = transpile(c, device, off);
    const auto b = transpile(c, device);
    EXPECT_LE(b.report.final_counts.at(GateKind::CX), a.report.final_counts.at(GateKind::CX));
    EXPECT_LT(ref::phase_distance(ref::unitary(place(c, b.report.mapping, 5)), ref::unitary(b.circuit)), 1e-9);
  }
}

TEST(Transpile, ExplicitMappingAndErrors) {
  const auto device = CouplingGraph::linear(3);
  Circuit c(3);
  c.add(Gate::h(1)).add(Gate::cx(1, 3));
  TranspileOptions opt;
  opt.mapping = QubitMapping{{2, 1, 0}};
  const auto r = transpile(c, device, opt);
  EXPECT_EQ(r.report.mapping.physical, (std::vector<int>{2, 1, 0}));
  EXPECT_TRUE(r.report.legal());
  opt.mapping = QubitMapping{{0, 0, 1}};
  EXPECT_THROW(transpile(c, device, opt), InvalidArgument);
  EXPECT_THROW(transpile(Circuit(4), device), InvalidArgument);
}

TEST(Transpile, LogicalBits) {
  const QubitMapping m{{3, 0, 1}};
  EXPECT_EQ(logical_bits("01101", m, 1, 3), "001");
}

}  // namespace
}  // namespace lcpl
