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

#include "lcpl/oracle.hpp"

#include <bit>

#include "lcpl/errors.hpp"

namespace lcpl {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw InvalidArgument("bit values must be 0 or 1");
  }
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("not a binary string: '" + std::string(text) + "'");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return BitString(std::move(bits));
}

BitString BitString::from_index(std::uint64_t index, int n) {
  if (n < 0 || n > 63) throw InvalidArgument("bit string length must be in 0..63");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) bits[static_cast<std::size_t>(j)] = (index >> (n - 1 - j)) & 1u;
  return BitString(std::move(bits));
}

std::uint64_t BitString::to_index() const {
  if (size() > 63) throw InvalidArgument("bit string too long for an integer index");
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

BitString BitString::prefix(int len) const {
  return BitString(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + len));
}

std::string BitString::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

SecretString::SecretString(BitString bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw InvalidArgument("secret string must have at least one bit");
}

int lcp(const SecretString& s, const BitString& x) {
  if (x.size() != s.size()) {
    throw InvalidArgument("lcp: |x| = " + std::to_string(x.size()) + " but |s| = " +
                          std::to_string(s.size()));
  }
  int i = 0;
  while (i < s.size() && x.bit(i + 1) == s.bit(i + 1)) ++i;
  return i;
}

int evaluate_f(const SecretString& s, const Query& query) {
  if (query.q < 0 || query.q > s.size() - 1) {
    throw InvalidArgument("query q = " + std::to_string(query.q) + " outside 0.." +
                          std::to_string(s.size() - 1));
  }
  return lcp(s, query.x) > query.q ? 1 : 0;
}

int f(const SecretString& s, const Query& query, QueryLedger& ledger) {
  int bit = evaluate_f(s, query);
  ledger.record_classical();
  return bit;
}

std::vector<std::int8_t> oracle_diagonal(const SecretString& s, int t) {
  const int n = s.size();
  if (t < 1) throw InvalidArgument("oracle_diagonal: t must be >= 1");
  if (n + t > Statevector::kMaxQubits) {
    throw InvalidArgument("oracle_diagonal: n + t exceeds " + std::to_string(Statevector::kMaxQubits));
  }
  const std::uint64_t secret = s.bits().to_index();
  const std::uint64_t qmask = (std::uint64_t{1} << t) - 1;
  std::vector<std::int8_t> signs(std::size_t{1} << (n + t));
  for (std::uint64_t b = 0; b < signs.size(); ++b) {
    const std::uint64_t x = b >> t;
    const std::uint64_t q = b & qmask;
    const std::uint64_t diff = x ^ secret;
    const int prefix = diff == 0 ? n : n - std::bit_width(diff);
    const bool fires = q < static_cast<std::uint64_t>(n) && prefix > static_cast<int>(q);
    signs[b] = fires ? -1 : 1;
  }
  return signs;
}

PhaseOracle::PhaseOracle(const SecretString& s, int t)
    : num_qubits_(s.size() + t), signs_(oracle_diagonal(s, t)) {}

void PhaseOracle::apply(Statevector& state, QueryLedger& ledger) const {
  state.apply_phase_diagonal(signs_);
  ledger.record_quantum();
}

}  // namespace lcpl
