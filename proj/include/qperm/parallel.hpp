// Copyright 2026 The qperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace qperm {

/// Execution knobs shared by the exponential-sum kernels.
struct ExecOptions {
  /// Worker count. Results are bit-reproducible for a fixed value.
  unsigned threads = 1;
};

/// Splits [0, count) into contiguous chunks, one per worker, and returns the per-chunk
/// results in chunk order. The partition depends only on `count` and `exec.threads`,
/// so merging the results front to back gives a deterministic total.
template <typename Result, typename ChunkFn>
std::vector<Result> run_chunks(std::uint64_t count, const ExecOptions& exec, ChunkFn&& chunk_fn) {
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(exec.threads, count));
  std::vector<Result> results(workers);
  auto bounds = [&](std::uint64_t w) { return count / workers * w + std::min(w, count % workers); };
  if (workers == 1) {
    results[0] = chunk_fn(std::uint64_t{0}, count);
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] { results[w] = chunk_fn(bounds(w), bounds(w + 1)); });
  }
  pool.clear();
  return results;
}

}  // namespace qperm
