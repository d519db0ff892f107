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

#include "cgp/conflict_graph.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace cgp {

namespace {

std::uint64_t key(Node u, Node v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

struct ExpansionPlan {
  std::vector<ExpansionStatus> status;
  std::size_t pairs = 0;
  std::size_t sampled = 0;
  std::size_t skipped = 0;
};

// Decided up front, in input order, so the edge set never depends on how the
// cliques are later distributed over workers.
ExpansionPlan plan_expansion(std::span<const Clique> cliques,
                             const GraphBuildOptions& options) {
  ExpansionPlan plan;
  plan.status.resize(cliques.size(), ExpansionStatus::kFull);
  bool halted = false;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const std::size_t n = cliques[i].nodes.size();
    const std::size_t s = std::min(n, options.max_clique_sample);
    const std::size_t pairs = s < 2 ? 0 : s * (s - 1) / 2;
    if (halted || plan.pairs + pairs > options.max_pair_expansions) {
      halted = true;
      plan.status[i] = ExpansionStatus::kSkipped;
      ++plan.skipped;
      continue;
    }
    plan.pairs += pairs;
    if (s < n) {
      plan.status[i] = ExpansionStatus::kSampled;
      ++plan.sampled;
    }
  }
  return plan;
}

void expand_clique(const Clique& clique, std::size_t position,
                   ExpansionStatus status, std::size_t num_nodes,
                   const GraphBuildOptions& options,
                   std::vector<std::uint64_t>& keys, DeadlinePoll& poll) {
  if (status == ExpansionStatus::kSkipped) return;
  for (Node v : clique.nodes)
    if (v >= num_nodes) throw std::out_of_range("clique node outside the graph");

  std::vector<Node> members = clique.nodes;
  if (status == ExpansionStatus::kSampled) {
    SplitMix64 rng(mix_seed(options.seed, position));
    const std::size_t s = options.max_clique_sample;
    for (std::size_t i = 0; i < s; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(members.size() - i));
      std::swap(members[i], members[j]);
    }
    members.resize(s);
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      poll.tick();
      if (members[a] == members[b]) continue;
      keys.push_back(key(members[a], members[b]));
      keys.push_back(key(members[b], members[a]));
    }
  }
}

void fill_stats(GraphBuildStats* stats, ExpansionPlan plan) {
  if (!stats) return;
  stats->pair_expansions = plan.pairs;
  stats->cliques_sampled = plan.sampled;
  stats->cliques_skipped = plan.skipped;
  stats->status = std::move(plan.status);
}

ConflictGraph trivial_graph(std::size_t num_binaries) {
  std::vector<std::uint64_t> keys;
  keys.reserve(2 * num_binaries);
  for (std::size_t b = 0; b < num_binaries; ++b) {
    const auto u = static_cast<Node>(b);
    const auto v = static_cast<Node>(b + num_binaries);
    keys.push_back(key(u, v));
    keys.push_back(key(v, u));
  }
  return ConflictGraph::from_directed_keys(num_binaries, std::move(keys));
}

}  // namespace

ConflictGraph::ConflictGraph(std::size_t num_binaries)
    : num_binaries_(num_binaries), offsets_(2 * num_binaries + 1, 0) {}

ConflictGraph ConflictGraph::from_directed_keys(std::size_t num_binaries,
                                                std::vector<std::uint64_t> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  ConflictGraph g(num_binaries);
  const std::size_t nodes = g.num_nodes();
  g.adjacency_.reserve(keys.size());
  for (std::uint64_t k : keys) {
    const auto u = static_cast<Node>(k >> 32);
    const auto v = static_cast<Node>(k & 0xFFFFFFFFULL);
    if (u >= nodes || v >= nodes) throw std::out_of_range("edge node outside the graph");
    if (u == v) continue;
    ++g.offsets_[u + 1];
    g.adjacency_.push_back(v);
  }
  for (std::size_t v = 0; v < nodes; ++v) g.offsets_[v + 1] += g.offsets_[v];
  return g;
}

bool ConflictGraph::adjacent(Node u, Node v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<Node, Node>> ConflictGraph::edges() const {
  std::vector<std::pair<Node, Node>> out;
  out.reserve(num_edges());
  for (Node u = 0; u < num_nodes(); ++u)
    for (Node v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<Clique> trivial_conflicts(std::size_t num_binaries) {
  std::vector<Clique> out;
  out.reserve(num_binaries);
  for (std::size_t b = 0; b < num_binaries; ++b)
    out.push_back(Clique{{static_cast<Node>(b), static_cast<Node>(b + num_binaries)},
                         CliqueSource::kTrivialPair});
  return out;
}

ConflictGraph build_graph(std::span<const Clique> cliques,
                          std::size_t num_binaries,
                          const GraphBuildOptions& options,
                          GraphBuildStats* stats) {
  ExpansionPlan plan = plan_expansion(cliques, options);
  std::vector<std::uint64_t> keys;
  keys.reserve(2 * plan.pairs);
  DeadlinePoll poll(options.deadline);
  for (std::size_t i = 0; i < cliques.size(); ++i)
    expand_clique(cliques[i], i, plan.status[i], 2 * num_binaries, options, keys, poll);
  fill_stats(stats, std::move(plan));
  return ConflictGraph::from_directed_keys(num_binaries, std::move(keys));
}

ConflictGraph or_merge(const ConflictGraph& a, const ConflictGraph& b) {
  if (a.num_binaries() != b.num_binaries())
    throw std::invalid_argument("or_merge: graphs have different dimensions");
  std::vector<std::size_t> offsets(a.num_nodes() + 1, 0);
  std::vector<Node> adjacency;
  adjacency.reserve(std::max(a.stored_nnz(), b.stored_nnz()));
  for (Node v = 0; v < a.num_nodes(); ++v) {
    const auto na = a.neighbors(v);
    const auto nb = b.neighbors(v);
    std::set_union(na.begin(), na.end(), nb.begin(), nb.end(),
                   std::back_inserter(adjacency));
    offsets[v + 1] = adjacency.size();
  }
  return ConflictGraph(a.num_binaries(), std::move(offsets), std::move(adjacency));
}

ConflictGraph build_graph_parallel(std::span<const Clique> cliques,
                                   std::size_t num_binaries, std::size_t k,
                                   std::uint64_t seed,
                                   const GraphBuildOptions& options,
                                   GraphBuildStats* stats) {
  ExpansionPlan plan = plan_expansion(cliques, options);
  const Partition part = shuffle_partition(cliques.size(), k, seed);
  const std::size_t workers = std::min(k, std::max<std::size_t>(cliques.size(), 1));

  std::vector<ConflictGraph> partials(workers);
  fork_join(workers, [&](std::size_t w) {
    std::vector<std::uint64_t> keys;
    DeadlinePoll poll(options.deadline);
    for (std::size_t item : part.block(w))
      expand_clique(cliques[item], item, plan.status[item], 2 * num_binaries,
                    options, keys, poll);
    partials[w] = ConflictGraph::from_directed_keys(num_binaries, std::move(keys));
  });

  ConflictGraph combined = reduce_pairwise(
      std::move(partials), [](ConflictGraph absorbed, ConflictGraph survivor) {
        return or_merge(absorbed, survivor);
      });
  fill_stats(stats, std::move(plan));
  return or_merge(trivial_graph(num_binaries), combined);
}

std::string dump_edges(const ConflictGraph& graph) {
  std::string out;
  for (const auto& [u, v] : graph.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace cgp
