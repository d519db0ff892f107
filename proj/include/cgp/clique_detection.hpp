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

// Maximal clique detection from a conflicting knapsack.
//
// With terms sorted a_1 <= ... <= a_n, let phi be the smallest position with
// a_phi + a_{phi+1} > b. The suffix {phi..n} is the original clique. Walking
// i = phi-1 down to 1, the smallest sigma > i with a_i + a_sigma > b gives the
// clique {i} + {sigma..n}; the walk stops at the first i without such sigma.
// Both searches are binary searches over the sorted coefficients.
//
// The "other" cliques share suffixes of one sorted order, so they are kept as
// (head, suffix start) pairs and only expanded on request.

#ifndef CGP_CLIQUE_DETECTION_HPP_
#define CGP_CLIQUE_DETECTION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cgp/clique.hpp"
#include "cgp/parallel.hpp"
#include "cgp/presolve_detect.hpp"

namespace cgp {

/// Term positions {head} + [suffix_begin, n) of one knapsack.
struct SuffixClique {
  std::uint32_t head = 0;
  std::uint32_t suffix_begin = 0;
  bool operator==(const SuffixClique&) const = default;
};

struct KnapsackCliques {
  std::optional<std::uint32_t> org_begin;  // original clique = [org_begin, n)
  std::vector<SuffixClique> others;
  std::size_t work = 0;  // coefficient reads

  bool empty() const { return !org_begin; }
};

/// Throws std::invalid_argument when the terms are not sorted.
KnapsackCliques detect_cliques(const PureBinaryConstraint& pbc);

/// Term positions of a detected clique, in sorted-coefficient order.
std::vector<std::uint32_t> org_positions(const PureBinaryConstraint& pbc,
                                         const KnapsackCliques& found);
std::vector<std::uint32_t> other_positions(const PureBinaryConstraint& pbc,
                                           const SuffixClique& clique);

struct OtherCliqueRef {
  std::uint32_t knapsack = 0;  // index into the detection input
  SuffixClique clique;
};

struct CliqueHarvest {
  std::vector<Clique> org;
  std::vector<std::uint32_t> org_knapsack;  // source knapsack of each org clique
  std::vector<OtherCliqueRef> other;
  /// Node of every term, per input knapsack, in sorted-coefficient order.
  std::vector<std::vector<Node>> knapsack_nodes;
  std::size_t work = 0;

  Clique materialize(const OtherCliqueRef& ref) const;
  std::vector<Clique> materialize_other() const;
};

/// Shuffles the knapsacks with `seed`, splits them into k near-equal blocks
/// and runs detect_cliques on each block on its own worker. Results are
/// concatenated in worker order, i.e. in shuffled order, which depends on
/// the seed but not on k.
CliqueHarvest detect_cliques_parallel(std::span<const PureBinaryConstraint> ck,
                                      const BinaryIndex& index, std::size_t k,
                                      std::uint64_t seed,
                                      const Deadline* deadline = nullptr);

}  // namespace cgp

#endif  // CGP_CLIQUE_DETECTION_HPP_
