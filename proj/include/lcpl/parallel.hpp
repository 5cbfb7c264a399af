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

namespace lcpl {

/// Worker threads to use: LCP_LEARN_THREADS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
int worker_count();

/// Calls fn(i) for i in [0, count) across worker_count() threads. Work items
/// must be independent. The first exception thrown by any item is rethrown
/// after all workers stop.
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& fn);

}  // namespace lcpl
