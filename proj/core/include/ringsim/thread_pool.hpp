// Copyright 2026 the ringsim authors
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

#include <cstddef>
#include <functional>

namespace ringsim {

/// requested = 0 picks the hardware concurrency (at least 1).
int resolve_thread_count(int requested);

/// Runs body(0) .. body(count-1) on up to `threads` workers pulling from a
/// shared atomic counter. Results must be written to per-index slots; the
/// caller reduces them afterwards in a fixed order, so the outcome is
/// independent of the schedule. The first exception thrown by any item is
/// rethrown after all workers have joined.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace ringsim
