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

#include "cgp/parallel.hpp"

#include <numeric>
#include <stdexcept>

namespace cgp {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound is 0");
  // Reject the low remainder band so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = (*this)();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 rng(seed ^ (stream * 0xD1B54A32D192ED03ULL));
  rng();
  return rng();
}

std::vector<IndexRange> even_blocks(std::size_t count, std::size_t k) {
  if (k == 0) throw std::invalid_argument("even_blocks: k must be >= 1");
  std::vector<IndexRange> blocks;
  blocks.reserve(k);
  const std::size_t base = count / k;
  const std::size_t extra = count % k;
  std::size_t begin = 0;
  for (std::size_t w = 0; w < k; ++w) {
    const std::size_t len = base + (w < extra ? 1 : 0);
    blocks.push_back({begin, begin + len});
    begin += len;
  }
  return blocks;
}

Partition shuffle_partition(std::size_t count, std::size_t k,
                            std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("shuffle_partition: k must be >= 1");
  Partition p;
  p.seed = seed;
  p.k = k;
  p.order.resize(count);
  std::iota(p.order.begin(), p.order.end(), std::size_t{0});
  shuffle(std::span<std::size_t>(p.order), seed);
  p.blocks = even_blocks(count, k);
  return p;
}

std::vector<std::vector<MergeStep>> reduction_schedule(std::size_t k) {
  std::vector<std::vector<MergeStep>> rounds;
  for (std::size_t half = 1; half < k; half *= 2) {
    const std::size_t run = 2 * half;
    std::vector<MergeStep> round;
    for (std::size_t start = 0; start + half < k; start += run) {
      const std::size_t left = start + half - 1;
      const std::size_t right = std::min(start + run, k) - 1;
      round.push_back({left, right});
    }
    rounds.push_back(std::move(round));
  }
  return rounds;
}

}  // namespace cgp
