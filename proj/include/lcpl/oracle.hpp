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

#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lcpl/statevector.hpp"

namespace lcpl {

/// Bit sequence b_1..b_n, stored in reading order (bit(1) is the first).
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Accepts only '0' and '1'; throws InvalidArgument otherwise.
  static BitString parse(std::string_view text);
  static BitString zeros(int n) { return BitString(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)); }

  /// b_1 is the most significant bit; requires n <= 63.
  static BitString from_index(std::uint64_t index, int n);
  std::uint64_t to_index() const;

  int size() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }

  /// 1-based access.
  int bit(int j) const { return bits_[static_cast<std::size_t>(j - 1)]; }
  void set(int j, int value) { bits_[static_cast<std::size_t>(j - 1)] = value ? 1 : 0; }
  void flip(int j) { bits_[static_cast<std::size_t>(j - 1)] ^= 1; }

  BitString prefix(int len) const;
  std::string str() const;

  bool operator==(const BitString&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// The teacher's hidden string; never empty.
class SecretString {
 public:
  explicit SecretString(BitString bits);
  static SecretString parse(std::string_view text) { return SecretString(BitString::parse(text)); }

  const BitString& bits() const { return bits_; }
  int size() const { return bits_.size(); }
  int bit(int j) const { return bits_.bit(j); }
  std::string str() const { return bits_.str(); }

 private:
  BitString bits_;
};

/// A question (x, q) with |x| = n and 0 <= q <= n-1.
struct Query {
  BitString x;
  int q = 0;
};

/// Per-session query accounting. Counters only grow.
class QueryLedger {
 public:
  void record_classical() { classical_.fetch_add(1, std::memory_order_relaxed); }
  void record_quantum() { quantum_.fetch_add(1, std::memory_order_relaxed); }

  std::uint64_t classical_queries() const { return classical_.load(std::memory_order_relaxed); }
  std::uint64_t quantum_oracle_uses() const { return quantum_.load(std::memory_order_relaxed); }
  std::uint64_t total() const { return classical_queries() + quantum_oracle_uses(); }

 private:
  std::atomic<std::uint64_t> classical_{0};
  std::atomic<std::uint64_t> quantum_{0};
};

/// Length of the longest common prefix of s and x.
int lcp(const SecretString& s, const BitString& x);

/// f_s(x, q) = 1 iff lcp(s, x) > q. Counts one classical query.
int f(const SecretString& s, const Query& query, QueryLedger& ledger);

/// Ledger-free evaluation for building diagonals and tests.
int evaluate_f(const SecretString& s, const Query& query);

/// Sign diagonal (-1)^{f_s(x, q)} over n + t qubits, index = x * 2^t + q.
/// Register values q >= n get sign +1.
std::vector<std::int8_t> oracle_diagonal(const SecretString& s, int t);

/// Phase oracle O_s on an (n + t)-qubit register.
class PhaseOracle {
 public:
  PhaseOracle(const SecretString& s, int t);

  int num_qubits() const { return num_qubits_; }
  const std::vector<std::int8_t>& signs() const { return signs_; }

  /// Applies the diagonal and records one quantum oracle use.
  void apply(Statevector& state, QueryLedger& ledger) const;

 private:
  int num_qubits_;
  std::vector<std::int8_t> signs_;
};

/// The learner's view of the teacher: ask (x, q), receive a bit. Every
/// question is recorded in the ledger before it is answered.
class Teacher {
 public:
  explicit Teacher(QueryLedger& ledger) : ledger_(ledger) {}
  virtual ~Teacher() = default;

  virtual int secret_length() const = 0;

  /// Returns the raw answer; learners reject anything that is not 0 or 1.
  int ask(const Query& query) {
    ledger_.record_classical();
    return answer(query);
  }

  QueryLedger& ledger() { return ledger_; }

 protected:
  virtual int answer(const Query& query) = 0;

 private:
  QueryLedger& ledger_;
};

class SecretTeacher final : public Teacher {
 public:
  SecretTeacher(SecretString secret, QueryLedger& ledger) : Teacher(ledger), secret_(std::move(secret)) {}
  int secret_length() const override { return secret_.size(); }

 protected:
  int answer(const Query& query) override { return evaluate_f(secret_, query); }

 private:
  SecretString secret_;
};

/// Teacher backed by an arbitrary callback, e.g. one configured from a file
/// or a deliberately faulty one in tests.
class FunctionTeacher final : public Teacher {
 public:
  FunctionTeacher(int n, std::function<int(const Query&)> fn, QueryLedger& ledger)
      : Teacher(ledger), n_(n), fn_(std::move(fn)) {}
  int secret_length() const override { return n_; }

 protected:
  int answer(const Query& query) override { return fn_(query); }

 private:
  int n_;
  std::function<int(const Query&)> fn_;
};

}  // namespace lcpl
