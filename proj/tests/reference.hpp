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


// Test-side reference implementations. They deliberately avoid the
// library's simulator: unitaries are built from Kronecker products of
// textbook 2x2 matrices, and oracle values from plain string comparison.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lcpl/circuit.hpp"

namespace ref {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;

inline Mat m2(C a, C b, C c, C d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Mat gate_matrix(const lcpl::Gate& g) {
  const C i(0, 1);
  switch (g.kind) {
    case lcpl::GateKind::X: return m2(0, 1, 1, 0);
    case lcpl::GateKind::Z: return m2(1, 0, 0, -1);
    case lcpl::GateKind::H: return m2(1, 1, 1, -1) / std::sqrt(2.0);
    case lcpl::GateKind::RZ: return m2(std::exp(-i * g.theta / 2.0), 0, 0, std::exp(i * g.theta / 2.0));
    case lcpl::GateKind::SX: return m2(1.0 + i, 1.0 - i, 1.0 - i, 1.0 + i) / 2.0;
    case lcpl::GateKind::CX: break;
  }
  return Mat::Identity(2, 2);
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  }
  return out;
}

// Tensor product over qubits 1..width (qubit 1 leftmost, i.e. most
// significant); `ops[k]` acts on qubit k + 1.
inline Mat tensor(const std::vector<Mat>& ops) {
  Mat out = Mat::Identity(1, 1);
  for (const auto& op : ops) out = kron(out, op);
  return out;
}

inline Mat embed(const lcpl::Gate& g, int width) {
  std::vector<Mat> ops(static_cast<std::size_t>(width), Mat::Identity(2, 2));
  if (g.kind != lcpl::GateKind::CX) {
    ops[static_cast<std::size_t>(g.qubit - 1)] = gate_matrix(g);
    return tensor(ops);
  }
  auto p0 = ops;
  auto p1 = ops;
  p0[static_cast<std::size_t>(g.qubit - 1)] = m2(1, 0, 0, 0);
  p1[static_cast<std::size_t>(g.qubit - 1)] = m2(0, 0, 0, 1);
  p1[static_cast<std::size_t>(g.target - 1)] = m2(0, 1, 1, 0);
  return tensor(p0) + tensor(p1);
}

inline Mat unitary(const lcpl::Circuit& c) {
  const auto dim = Eigen::Index{1} << c.width();
  Mat u = Mat::Identity(dim, dim);
  for (const auto& g : c.gates()) u = embed(g, c.width()) * u;
  return u;
}

inline Mat diagonal(const std::vector<std::int8_t>& signs) {
  Mat d = Mat::Zero(static_cast<Eigen::Index>(signs.size()), static_cast<Eigen::Index>(signs.size()));
  for (std::size_t b = 0; b < signs.size(); ++b) d(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = signs[b];
  return d;
}

// max |actual - lambda * expected| with lambda fixed on the largest entry of
// `expected`.
inline double phase_distance(const Mat& expected, const Mat& actual) {
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) return INFINITY;
  Eigen::Index r0 = 0, c0 = 0;
  expected.cwiseAbs().maxCoeff(&r0, &c0);
  const C lambda = actual(r0, c0) / expected(r0, c0);
  if (std::abs(std::abs(lambda) - 1.0) > 1e-6) return INFINITY;
  return (actual - lambda * expected).cwiseAbs().maxCoeff();
}

inline Eigen::VectorXcd apply(const lcpl::Circuit& c, Eigen::VectorXcd state) {
  for (const auto& g : c.gates()) state = embed(g, c.width()) * state;
  return state;
}

inline Eigen::VectorXcd zero_state(int width) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << width);
  v(0) = 1.0;
  return v;
}

inline std::string bits_of(std::uint64_t v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k) {
    if ((v >> (n - 1 - k)) & 1) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

inline int lcp(const std::string& a, const std::string& b) {
  int k = 0;
  while (k < static_cast<int>(std::min(a.size(), b.size())) && a[static_cast<std::size_t>(k)] == b[static_cast<std::size_t>(k)]) ++k;
  return k;
}

// (-1)^{[lcp(s, x) > q]} for index x * 2^t + q.
inline std::vector<std::int8_t> diagonal_of(const std::string& s, int t) {
  const int n = static_cast<int>(s.size());
  std::vector<std::int8_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    for (std::uint64_t q = 0; q < (std::uint64_t{1} << t); ++q) {
      out.push_back(lcp(s, bits_of(x, n)) > static_cast<int>(q) ? -1 : 1);
    }
  }
  return out;
}

inline lcpl::Circuit random_circuit(std::mt19937_64& rng, int width, int max_gates) {
  lcpl::Circuit c(width);
  const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_gates));
  auto qubit = [&] { return 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(width)); };
  for (int k = 0; k < count; ++k) {
    const int a = qubit();
    switch (rng() % 7) {
      case 0: c.add(lcpl::Gate::x(a)); break;
      case 1: c.add(lcpl::Gate::z(a)); break;
      case 2: c.add(lcpl::Gate::h(a)); break;
      case 3: c.add(lcpl::Gate::sx(a)); break;
      case 4: c.add(lcpl::Gate::rz(a, (static_cast<double>(rng() % 16) - 8.0) * kPi / 4.0)); break;
      case 5: c.add(lcpl::Gate::rz(a, std::uniform_real_distribution<double>(-7.0, 7.0)(rng))); break;
      default: {
        if (width < 2) break;
        int b = qubit();
        while (b == a) b = qubit();
        c.add(lcpl::Gate::cx(a, b));
      }
    }
  }
  return c;
}

}  // namespace ref
