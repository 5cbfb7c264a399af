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

#include <cstdint>
#include <functional>

#include "lcpl/oracle.hpp"

namespace lcpl {

struct ClassicalResult {
  BitString recovered;
  int queries = 0;
};

/// Called after each loop iteration with the query index q and the current
/// guess x; after iteration q, x agrees with s on bits 1..q+1.
using ClassicalObserver = std::function<void(int q, const BitString& x)>;

/// Prefix-walking learner: start from x = 0^n and for q = 0..n-1 ask (x, q);
/// a 0 answer means bit q+1 of x is wrong, so flip it. Uses exactly n queries.
ClassicalResult learn_classical(Teacher& teacher, const ClassicalObserver& observer = {});

/// Minimum external path length over binary trees with N leaves:
/// N (log2 N + 1 + gamma - 2^gamma), gamma = ceil(log2 N) - log2 N.
struct LowerBoundReport {
  std::uint64_t num_leaves = 0;
  double gamma = 0.0;
  double min_epl = 0.0;
  double min_avg_queries = 0.0;
};

LowerBoundReport min_external_path_length(std::uint64_t num_leaves);

struct OptimalityReport {
  int n = 0;
  std::uint64_t secrets = 0;
  std::uint64_t recovered = 0;
  int min_queries = 0;
  int max_queries = 0;
  double avg_queries = 0.0;
  double lower_bound = 0.0;

  bool passed() const {
    return recovered == secrets && min_queries == n && max_queries == n && avg_queries == lower_bound;
  }
};

/// Runs the learner against every secret in {0,1}^n (n <= 12).
OptimalityReport verify_optimality(int n);

}  // namespace lcpl
