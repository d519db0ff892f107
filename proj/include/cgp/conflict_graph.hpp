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

// Conflict graph over 2 * n_B literal nodes stored as a symmetric CSR
// adjacency with sorted neighbor lists and an empty diagonal.

#ifndef CGP_CONFLICT_GRAPH_HPP_
#define CGP_CONFLICT_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cgp/clique.hpp"
#include "cgp/parallel.hpp"

namespace cgp {

class ConflictGraph {
 public:
  ConflictGraph() = default;
  explicit ConflictGraph(std::size_t num_binaries);

  /// Builds from directed edge keys (u << 32 | v). Keys may repeat and appear
  /// in any order; both directions must be present.
  static ConflictGraph from_directed_keys(std::size_t num_binaries,
                                          std::vector<std::uint64_t> keys);

  std::size_t num_binaries() const { return num_binaries_; }
  std::size_t num_nodes() const { return 2 * num_binaries_; }
  std::size_t stored_nnz() const { return adjacency_.size(); }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const Node> neighbors(Node v) const {
    return std::span<const Node>(adjacency_).subspan(
        offsets_[v], offsets_[v + 1] - offsets_[v]);
  }
  std::size_t degree(Node v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Node u, Node v) const;

  /// Undirected edges (u < v) in ascending order.
  std::vector<std::pair<Node, Node>> edges() const;

  bool operator==(const ConflictGraph&) const = default;

 private:
  friend ConflictGraph or_merge(const ConflictGraph& a, const ConflictGraph& b);

  ConflictGraph(std::size_t num_binaries, std::vector<std::size_t> offsets,
                std::vector<Node> adjacency)
      : num_binaries_(num_binaries),
        offsets_(std::move(offsets)),
        adjacency_(std::move(adjacency)) {}

  std::size_t num_binaries_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Node> adjacency_;
};

/// The n_B cliques {x_b, 1 - x_b}.
std::vector<Clique> trivial_conflicts(std::size_t num_binaries);

struct GraphBuildOptions {
  /// Cliques longer than this are replaced by a uniform sample of this many
  /// members before pair expansion.
  std::size_t max_clique_sample = 1000;
  /// Cumulative cap on expanded pairs, taken over the cliques in input
  /// order. The first clique that would cross the cap and every later one
  /// contribute no edges.
  std::size_t max_pair_expansions = 25'000'000;
  /// Seeds the per-clique sampling streams (stream = input position).
  std::uint64_t seed = 0;
  /// Polled during pair expansion; expiry throws TimeLimitReached.
  const Deadline* deadline = nullptr;
};

enum class ExpansionStatus : std::uint8_t { kFull, kSampled, kSkipped };

struct GraphBuildStats {
  std::size_t pair_expansions = 0;
  std::size_t cliques_sampled = 0;
  std::size_t cliques_skipped = 0;
  std::vector<ExpansionStatus> status;  // per input clique

  bool sample_limit_hit() const { return cliques_sampled > 0; }
  bool pair_limit_hit() const { return cliques_skipped > 0; }
};

/// Pairwise expansion of every clique; trivial complement edges are not
/// added. Throws std::out_of_range for nodes >= 2 * n_B.
ConflictGraph build_graph(std::span<const Clique> cliques,
                          std::size_t num_binaries,
                          const GraphBuildOptions& options = {},
                          GraphBuildStats* stats = nullptr);

/// Elementwise union. Throws std::invalid_argument on differing n_B.
ConflictGraph or_merge(const ConflictGraph& a, const ConflictGraph& b);

/// Shuffle-partitions the cliques over k workers, builds one partial graph
/// per worker, folds the partials with the pairwise OR tree and merges the
/// result into the graph of trivial complement edges. Equal to
/// build_graph(cliques) plus trivial edges for every k and seed.
ConflictGraph build_graph_parallel(std::span<const Clique> cliques,
                                   std::size_t num_binaries, std::size_t k,
                                   std::uint64_t seed,
                                   const GraphBuildOptions& options = {},
                                   GraphBuildStats* stats = nullptr);

/// Sorted "u v" lines (u < v, 0-based nodes), one per undirected edge.
std::string dump_edges(const ConflictGraph& graph);

}  // namespace cgp

#endif  // CGP_CONFLICT_GRAPH_HPP_
