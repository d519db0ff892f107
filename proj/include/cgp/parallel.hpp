// Copyright 2026 The cgpresolve Authors
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

// Fork-join substrate shared by the clique detection, graph build,
// extension and merge stages: a reproducible shuffle, near-equal block
// partitioning, a join that forwards worker exceptions, and the pairwise
// reduction tree used to combine per-worker partial results.

#ifndef CGP_PARALLEL_HPP_
#define CGP_PARALLEL_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace cgp {

/// SplitMix64 generator. Each call advances the state by the golden-ratio
/// increment 0x9E3779B97F4A7C15 and returns the state mixed through
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^ (z >> 31)
/// The constants fully define the stream, so shuffles are reproducible in any
/// language that implements the same three lines.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) built from the top 53 bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

class TimeLimitReached : public std::runtime_error {
 public:
  TimeLimitReached() : std::runtime_error("time limit reached") {}
};

/// Wall-clock deadline on the steady clock. Default-constructed deadlines
/// never expire.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}
  bool expired() const {
    return end_ && std::chrono::steady_clock::now() >= *end_;
  }
  /// Throws TimeLimitReached once expired.
  void check() const {
    if (expired()) throw TimeLimitReached();
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

/// Per-loop cooperative check: consults the clock on every 2^16-th tick.
class DeadlinePoll {
 public:
  explicit DeadlinePoll(const Deadline* deadline) : deadline_(deadline) {}
  void tick() {
    if (deadline_ && (++count_ & 0xFFFF) == 0) deadline_->check();
  }

 private:
  const Deadline* deadline_;
  std::uint32_t count_ = 0;
};

/// Derives an independent stream seed for item `stream` of a seeded run.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform Fisher-Yates shuffle driven by SplitMix64.
template <class T>
void shuffle(std::span<T> items, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  bool operator==(const IndexRange&) const = default;
};

/// A seeded permutation of item indices split into k consecutive blocks whose
/// sizes differ by at most one (the first count % k blocks carry the extra).
struct Partition {
  std::vector<std::size_t> order;
  std::vector<IndexRange> blocks;
  std::uint64_t seed = 0;
  std::size_t k = 1;

  std::span<const std::size_t> block(std::size_t worker) const {
    const IndexRange r = blocks.at(worker);
    return std::span<const std::size_t>(order).subspan(r.begin, r.size());
  }
};

/// k consecutive ranges over [0, count) whose sizes differ by at most one.
/// Throws std::invalid_argument when k == 0.
std::vector<IndexRange> even_blocks(std::size_t count, std::size_t k);

/// Throws std::invalid_argument when k == 0.
Partition shuffle_partition(std::size_t count, std::size_t k,
                            std::uint64_t seed);

/// Runs fn(worker) for worker in [0, workers). Worker 0 runs on the calling
/// thread. The first exception thrown by any worker is rethrown after all
/// workers have joined.
template <class Fn>
void fork_join(std::size_t workers, Fn&& fn) {
  if (workers == 0) return;
  std::vector<std::exception_ptr> errors(workers);
  auto guarded = [&](std::size_t w) {
    try {
      fn(w);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(guarded, w);
    guarded(0);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// One OR-merge of the reduction tree: partial `from` is absorbed into
/// partial `to` (0-based worker slots).
struct MergeStep {
  std::size_t from = 0;
  std::size_t to = 0;
  bool operator==(const MergeStep&) const = default;
};

/// ceil(log2 k) rounds. At depth d the slots are grouped in runs of 2^d; the
/// last slot of the left half-run is absorbed by the last existing slot of the
/// right half-run. For k a power of two this is exactly "slot i absorbs slot
/// i - 2^(d-1) for i in {2^d, 2*2^d, ...}" (1-based) and the result lands in
/// slot k. Ragged k still folds every slot into slot k.
std::vector<std::vector<MergeStep>> reduction_schedule(std::size_t k);

/// Combines k partial results along reduction_schedule(k). Merges within one
/// round run concurrently. `combine(absorbed, survivor)` must be associative
/// and commutative. Returns the surviving (last) slot; an empty input yields
/// a value-initialized T.
template <class T, class Combine>
T reduce_pairwise(std::vector<T> partials, Combine&& combine) {
  if (partials.empty()) return T{};
  for (const auto& round : reduction_schedule(partials.size())) {
    fork_join(round.size(), [&](std::size_t s) {
      const MergeStep step = round[s];
      partials[step.to] = combine(std::move(partials[step.from]),
                                  std::move(partials[step.to]));
    });
  }
  return std::move(partials.back());
}

}  // namespace cgp

#endif  // CGP_PARALLEL_HPP_
