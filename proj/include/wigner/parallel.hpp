// Copyright 2026 The wignersim Authors
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

#ifndef WIGNER_PARALLEL_HPP
#define WIGNER_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace wigner {

/// Runs f(i) for i in [0, n) across a pool sized by the hardware concurrency.
/// Work items are claimed from an atomic counter, so results must be written
/// to caller-owned slots indexed by i (deterministic output order regardless
/// of scheduling).  The first exception thrown by any worker is rethrown on
/// the calling thread after all workers join.
template <typename F>
void parallel_for(int n, F&& f) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = std::max(1, static_cast<int>(std::min<unsigned>(hw, n)));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        f(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace wigner

#endif  // WIGNER_PARALLEL_HPP
