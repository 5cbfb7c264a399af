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

#include "lcpl/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <vector>

#include "lcpl/errors.hpp"
#include "lcpl/parallel.hpp"

namespace lcpl {

ClassicalResult learn_classical(Teacher& teacher, const ClassicalObserver& observer) {
  const int n = teacher.secret_length();
  if (n < 1) throw InvalidArgument("learn_classical: n must be >= 1");
  ClassicalResult result{BitString::zeros(n), 0};
  for (int q = 0; q < n; ++q) {
    const int answer = teacher.ask(Query{result.recovered, q});
    ++result.queries;
    if (answer != 0 && answer != 1) {
      throw ProtocolError("teacher answered " + std::to_string(answer) + " to query q = " +
                          std::to_string(q));
    }
    if (answer == 0) result.recovered.flip(q + 1);
    if (observer) observer(q, result.recovered);
  }
  return result;
}

LowerBoundReport min_external_path_length(std::uint64_t num_leaves) {
  if (num_leaves < 1) throw InvalidArgument("min_external_path_length: need at least one leaf");
  LowerBoundReport r;
  r.num_leaves = num_leaves;
  const double n = static_cast<double>(num_leaves);
  if (std::has_single_bit(num_leaves)) {
    // gamma = 0 exactly; avoid log2 rounding.
    const double k = static_cast<double>(std::countr_zero(num_leaves));
    r.gamma = 0.0;
    r.min_epl = n * k;
  } else {
    const double lg = std::log2(n);
    r.gamma = static_cast<double>(std::bit_width(num_leaves)) - lg;
    r.min_epl = n * (lg + 1.0 + r.gamma - std::exp2(r.gamma));
  }
  r.min_avg_queries = r.min_epl / n;
  return r;
}

OptimalityReport verify_optimality(int n) {
  if (n < 1 || n > 12) throw InvalidArgument("verify_optimality: n must be in 1..12");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<int> queries(total, 0);
  std::vector<std::uint8_t> ok(total, 0);
  parallel_for(total, [&](std::uint64_t idx) {
    QueryLedger ledger;
    SecretTeacher teacher(SecretString(BitString::from_index(idx, n)), ledger);
    auto res = learn_classical(teacher);
    queries[idx] = static_cast<int>(ledger.classical_queries());
    ok[idx] = res.recovered.to_index() == idx && res.queries == queries[idx];
  });

  OptimalityReport rep;
  rep.n = n;
  rep.secrets = total;
  rep.min_queries = *std::min_element(queries.begin(), queries.end());
  rep.max_queries = *std::max_element(queries.begin(), queries.end());
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    sum += static_cast<std::uint64_t>(queries[i]);
    rep.recovered += ok[i];
  }
  rep.avg_queries = static_cast<double>(sum) / static_cast<double>(total);
  rep.lower_bound = min_external_path_length(total).min_avg_queries;
  return rep;
}

}  // namespace lcpl
