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

#include "lcpl/synth.hpp"

#include <bit>
#include <cmath>

#include "lcpl/errors.hpp"
#include "lcpl/quantum.hpp"

namespace lcpl {

namespace {

constexpr double kZeroAngle = 1e-12;

int width_of(std::size_t len) {
  if (len == 0 || !std::has_single_bit(len)) {
    throw InvalidArgument("diagonal length " + std::to_string(len) + " is not a power of two");
  }
  return std::countr_zero(len);
}

bool negligible(double theta) { return std::fabs(wrap_angle(theta)) < kZeroAngle; }

// A parity term c_w (-1)^{w.b} equals e^{i c_w} e^{-2 i c_w p} for parity p,
// and RZ(theta) on a qubit holding p is e^{-i theta/2} e^{i theta p}; so the
// rotation angle is -2 c_w and e^{i c_w} is global phase.
double term_angle(const WalshSpectrum& spectrum, std::uint64_t w) {
  return -2.0 * spectrum.coefficients[w];
}

Circuit synth_from_spectrum(const WalshSpectrum& spectrum, const SynthOptions& options) {
  const int m = spectrum.width;
  if (m > kMaxSynthWidth) {
    throw InvalidArgument("synth_diagonal: width " + std::to_string(m) + " exceeds " +
                          std::to_string(kMaxSynthWidth));
  }
  Circuit c(m);
  auto qubit_of_bit = [m](int bit) { return m - bit; };

  if (!options.gray_code) {
    for (std::uint64_t w = 1; w < spectrum.coefficients.size(); ++w) {
      const double theta = term_angle(spectrum, w);
      if (negligible(theta)) continue;
      const int top = static_cast<int>(std::bit_width(w)) - 1;
      const int target = qubit_of_bit(top);
      std::vector<int> controls;
      for (int b = 0; b < top; ++b) {
        if (w & (std::uint64_t{1} << b)) controls.push_back(qubit_of_bit(b));
      }
      for (int ctl : controls) c.add(Gate::cx(ctl, target));
      c.add(Gate::rz(target, theta));
      for (auto it = controls.rbegin(); it != controls.rend(); ++it) c.add(Gate::cx(*it, target));
    }
    return c;
  }

  // Terms whose highest set bit is `top` are accumulated on that bit's
  // qubit. The lower bits that occur in any of those terms walk a Gray
  // code, so each step toggles exactly one control; unused bits are skipped.
  for (int top = m - 1; top >= 0; --top) {
    const std::uint64_t block = std::uint64_t{1} << top;
    std::uint64_t support = 0;
    for (std::uint64_t u = 0; u < block; ++u) {
      if (!negligible(term_angle(spectrum, block | u))) support |= u | block;
    }
    if (support == 0) continue;
    support &= ~block;

    std::vector<int> bits;
    for (int b = 0; b < top; ++b) {
      if (support & (std::uint64_t{1} << b)) bits.push_back(b);
    }
    auto spread = [&](std::uint64_t g) {
      std::uint64_t u = 0;
      for (std::size_t j = 0; j < bits.size(); ++j) {
        if (g & (std::uint64_t{1} << j)) u |= std::uint64_t{1} << bits[j];
      }
      return u;
    };

    const int target = qubit_of_bit(top);
    std::uint64_t prev = 0;
    const std::uint64_t steps = std::uint64_t{1} << bits.size();
    for (std::uint64_t k = 0; k < steps; ++k) {
      const std::uint64_t g = k ^ (k >> 1);
      if (k > 0) c.add(Gate::cx(qubit_of_bit(bits[static_cast<std::size_t>(std::countr_zero(g ^ prev))]), target));
      const double theta = term_angle(spectrum, block | spread(g));
      if (!negligible(theta)) c.add(Gate::rz(target, theta));
      prev = g;
    }
    if (prev != 0) c.add(Gate::cx(qubit_of_bit(bits[static_cast<std::size_t>(std::countr_zero(prev))]), target));
  }
  return c;
}

}  // namespace

double WalshSpectrum::reconstruct(std::uint64_t b) const {
  double acc = 0.0;
  for (std::uint64_t w = 0; w < coefficients.size(); ++w) {
    acc += (std::popcount(w & b) & 1) ? -coefficients[w] : coefficients[w];
  }
  return acc;
}

WalshSpectrum walsh_decompose_phases(std::span<const double> phases) {
  WalshSpectrum spectrum;
  spectrum.width = width_of(phases.size());
  spectrum.coefficients.assign(phases.begin(), phases.end());
  auto& a = spectrum.coefficients;
  for (std::size_t h = 1; h < a.size(); h <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double x = a[j];
        const double y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
  const double scale = 1.0 / static_cast<double>(a.size());
  for (auto& v : a) v *= scale;
  return spectrum;
}

WalshSpectrum walsh_decompose(std::span<const std::int8_t> signs) {
  std::vector<double> phases(signs.size());
  for (std::size_t b = 0; b < signs.size(); ++b) {
    if (signs[b] != 1 && signs[b] != -1) throw InvalidArgument("diagonal entries must be +1 or -1");
    phases[b] = signs[b] < 0 ? kPi : 0.0;
  }
  return walsh_decompose_phases(phases);
}

Circuit synth_diagonal(std::span<const std::int8_t> signs, const SynthOptions& options) {
  if (width_of(signs.size()) > kMaxSynthWidth) {
    throw InvalidArgument("synth_diagonal: width exceeds " + std::to_string(kMaxSynthWidth));
  }
  return synth_from_spectrum(walsh_decompose(signs), options);
}

Circuit synth_phase_diagonal(std::span<const double> phases, const SynthOptions& options) {
  if (width_of(phases.size()) > kMaxSynthWidth) {
    throw InvalidArgument("synth_phase_diagonal: width exceeds " + std::to_string(kMaxSynthWidth));
  }
  return synth_from_spectrum(walsh_decompose_phases(phases), options);
}

Circuit synth_R() {
  Circuit c(2);
  c.add(Gate::h(1)).add(Gate::cx(1, 2)).add(Gate::z(1)).add(Gate::x(2)).add(Gate::h(1));
  return c;
}

Circuit decompose_H() {
  Circuit c(1);
  c.add(Gate::rz(1, kPi / 2)).add(Gate::sx(1)).add(Gate::rz(1, kPi / 2));
  return c;
}

FullCircuit build_full_circuit(const SecretString& s, const FullCircuitOptions& options) {
  const int n = s.size();
  if (n < 2) throw InvalidArgument("build_full_circuit: needs n >= 2");
  AlgorithmLayout layout = AlgorithmLayout::for_length(n);
  if (options.t) {
    if (*options.t < layout.t) {
      throw InvalidArgument("q register of " + std::to_string(*options.t) + " qubits cannot hold q = " +
                            std::to_string(q_value(layout.rounds)));
    }
    layout.t = *options.t;
  }
  if (layout.width() > kMaxSynthWidth) {
    throw InvalidArgument("build_full_circuit: " + std::to_string(layout.width()) +
                          " qubits exceeds the synthesis limit of " + std::to_string(kMaxSynthWidth));
  }

  FullCircuit out;
  out.n = n;
  out.t = layout.t;
  out.circuit = Circuit(layout.width());
  Circuit& c = out.circuit;

  const Circuit oracle = synth_diagonal(oracle_diagonal(s, layout.t), options.synth);
  const Circuit h_gate = [&] {
    if (options.decompose_h) return decompose_H();
    Circuit h(1);
    h.add(Gate::h(1));
    return h;
  }();
  const Circuit r = [&] {
    Circuit native = synth_R();
    if (!options.decompose_h) return native;
    Circuit expanded(2);
    for (const Gate& g : native.gates()) {
      if (g.kind != GateKind::H) {
        expanded.add(g);
        continue;
      }
      const int where[] = {g.qubit};
      expanded.append_mapped(h_gate, where);
    }
    return expanded;
  }();

  std::vector<int> q_map(static_cast<std::size_t>(layout.t));
  for (int k = 0; k < layout.t; ++k) q_map[static_cast<std::size_t>(k)] = layout.q_offset() + k + 1;

  for (int i = 1; i <= layout.rounds; ++i) {
    const int hi = 2 * i - 1;
    const int lo = 2 * i;
    const int hi_map[] = {hi};
    const int lo_map[] = {lo};
    c.append_mapped(h_gate, hi_map);
    c.append_mapped(h_gate, lo_map);
    c.append_mapped(q_shift(i, layout.t), q_map);
    OracleBlock blk;
    blk.first = c.size();
    c.append(oracle);
    blk.last = c.size();
    out.oracle_blocks.push_back(blk);
    const int pair[] = {hi, lo};
    c.append_mapped(r, pair);
  }
  return out;
}

}  // namespace lcpl
