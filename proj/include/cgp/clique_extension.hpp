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

// Greedy multi-bucket clique extension against a conflict graph.
//
// L holds every literal adjacent to all members of the base clique. Walking
// L in ascending node order, each literal joins every bucket it is fully
// adjacent to, or opens a new bucket if it joins none. The longest bucket
// (earliest created on ties) plus the base is the "longest" result; every
// other bucket plus the base is reported as well.

#ifndef CGP_CLIQUE_EXTENSION_HPP_
#define CGP_CLIQUE_EXTENSION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "cgp/clique.hpp"
#include "cgp/conflict_graph.hpp"

namespace cgp {

struct ExtensionResult {
  Clique longest;
  std::vector<Clique> others;
  std::size_t pair_checks = 0;  // adjacency lookups, including the L scan
};

/// Literals outside `clique` adjacent to every member, ascending. Intersects
/// neighbor lists starting from the member of smallest degree.
std::vector<Node> common_neighbors(const Clique& clique, const ConflictGraph& graph,
                                   std::size_t* work = nullptr);

/// Throws std::invalid_argument if `clique` is not a clique of `graph`.
ExtensionResult extend_clique(const Clique& clique, const ConflictGraph& graph);

struct ExtensionOptions {
  /// Per-worker cap on the literal count of generated extended cliques. A
  /// worker that reaches it passes its remaining inputs through unextended.
  std::size_t per_worker_nnz_budget = 1'250'000;
  /// Polled per adjacency lookup; expiry throws TimeLimitReached.
  const Deadline* deadline = nullptr;
};

struct ExtensionBatch {
  std::vector<Clique> longest;  // one per input, in shuffled input order
  std::vector<Clique> others;
  std::size_t pair_checks = 0;
  std::size_t passed_through = 0;  // inputs left unextended by the budget
  bool budget_hit = false;
};

ExtensionBatch extend_parallel(std::span<const Clique> cliques,
                               const ConflictGraph& graph, std::size_t k,
                               std::uint64_t seed,
                               const ExtensionOptions& options = {});

}  // namespace cgp

#endif  // CGP_CLIQUE_EXTENSION_HPP_
