// Copyright 2026 The edgering Authors.
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

// A bounded worker pool over independent jobs. Results are stored by job
// index, so the output order never depends on scheduling.

#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "edgering/error.hpp"

namespace edgering {

template <typename Result>
std::vector<Result> RunJobs(int count, int workers,
                            const std::function<Result(int)>& job) {
  Require(count >= 0, "job count must be nonnegative");
  Require(workers >= 1, "need at least one worker");
  std::vector<Result> results(count);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  int failed_index = count;
  std::mutex mu;
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        results[i] = job(i);
      } catch (...) {
        std::lock_guard lock(mu);
        // Report the lowest failing index, as a serial run would.
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  const int n = std::min(workers, std::max(count, 1));
  if (n == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < n; ++k) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace edgering
