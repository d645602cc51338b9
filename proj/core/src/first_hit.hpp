// Copyright 2026 The pgstlab Authors
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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace pgstlab::detail {

/// Smallest q in [1, q_max] for which `probe(q)` yields a value. Workers
/// claim ascending blocks and abandon blocks above the best hit, so the
/// answer is independent of the thread count.
template <typename Probe>
auto first_hit(std::int64_t q_max, unsigned threads, Probe probe)
    -> decltype(probe(std::int64_t{})) {
  using Result = decltype(probe(std::int64_t{}));
  constexpr std::int64_t kBlock = 1 << 16;
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

  std::atomic<std::int64_t> next_block{0};
  std::atomic<std::int64_t> best{kNone};
  std::mutex mutex;
  Result hit;

  auto work = [&] {
    for (;;) {
      const std::int64_t begin = 1 + next_block.fetch_add(1) * kBlock;
      if (begin > q_max || begin > best.load()) return;
      const std::int64_t end = std::min(q_max, begin + kBlock - 1);
      for (std::int64_t q = begin; q <= end; ++q) {
        if (Result r = probe(q)) {
          std::lock_guard lock(mutex);
          if (q < best.load()) {
            best.store(q);
            hit = std::move(r);
          }
          break;
        }
      }
    }
  };

  const std::int64_t blocks = (q_max + kBlock - 1) / kBlock;
  const auto workers = static_cast<unsigned>(
      std::clamp<std::int64_t>(static_cast<std::int64_t>(threads), 1, std::max<std::int64_t>(blocks, 1)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return hit;
}

}  // namespace pgstlab::detail
