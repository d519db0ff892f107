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

// Removal of dominated cliques. A clique is dropped when another clique's
// literal set contains it strictly, or equals it and sits at a smaller
// input index.

#ifndef CGP_CLIQUE_MERGE_HPP_
#define CGP_CLIQUE_MERGE_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cgp/clique.hpp"
#include "cgp/parallel.hpp"

namespace cgp {

/// True iff q2's node set is a subset of q1's. Both lists must be sorted.
bool dominates(const Clique& q1, const Clique& q2, std::size_t* work = nullptr);

inline constexpr std::size_t kNoDominator = std::numeric_limits<std::size_t>::max();

struct MergeOutcome {
  std::vector<Clique> kept;  // survivors in input order
  std::size_t removed_count = 0;
  std::vector<std::size_t> kept_index;  // input index of each survivor
  /// Per input: kNoDominator for survivors, otherwise the input index of a
  /// surviving clique that contains it.
  std::vector<std::size_t> dominator;
  std::size_t subset_scans = 0;          // node comparisons, all workers
  std::size_t max_worker_scans = 0;      // node comparisons, busiest worker
};

/// Candidate dominators of clique j are looked up through an inverted index
/// on j's rarest node and screened by length, first and last node, and a
/// 64-bit node-residue signature before the subset scan. The j range is split
/// into k static blocks; each worker writes private removal flags.
/// `deadline` is polled per candidate; expiry throws TimeLimitReached.
MergeOutcome merge_parallel(std::span<const Clique> cliques, std::size_t k,
                            const Deadline* deadline = nullptr);

}  // namespace cgp

#endif  // CGP_CLIQUE_MERGE_HPP_
