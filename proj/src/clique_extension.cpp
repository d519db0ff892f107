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

#include "cgp/clique_extension.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "cgp/parallel.hpp"

namespace cgp {

namespace {

void require_clique(const Clique& clique, const ConflictGraph& graph) {
  if (clique.nodes.empty()) throw std::invalid_argument("extend_clique: empty clique");
  for (Node v : clique.nodes)
    if (v >= graph.num_nodes())
      throw std::invalid_argument("extend_clique: node outside the graph");
  for (std::size_t a = 0; a < clique.nodes.size(); ++a)
    for (std::size_t b = a + 1; b < clique.nodes.size(); ++b)
      if (!graph.adjacent(clique.nodes[a], clique.nodes[b]))
        throw std::invalid_argument("extend_clique: input is not a clique of the graph");
}

Clique united(const Clique& base, const std::vector<Node>& bucket) {
  Clique out{{}, base.source};
  out.nodes.reserve(base.nodes.size() + bucket.size());
  std::set_union(base.nodes.begin(), base.nodes.end(), bucket.begin(), bucket.end(),
                 std::back_inserter(out.nodes));
  return out;
}

}  // namespace

std::vector<Node> common_neighbors(const Clique& clique, const ConflictGraph& graph,
                                   std::size_t* work) {
  if (clique.nodes.empty()) return {};
  std::vector<Node> order = clique.nodes;
  std::sort(order.begin(), order.end(), [&](Node a, Node b) {
    return graph.degree(a) < graph.degree(b);
  });
  const auto first = graph.neighbors(order.front());
  std::vector<Node> candidates(first.begin(), first.end());
  std::size_t touched = candidates.size();
  std::vector<Node> next;
  for (std::size_t i = 1; i < order.size() && !candidates.empty(); ++i) {
    const auto nbrs = graph.neighbors(order[i]);
    touched += candidates.size() + nbrs.size();
    next.clear();
    std::set_intersection(candidates.begin(), candidates.end(), nbrs.begin(),
                          nbrs.end(), std::back_inserter(next));
    candidates.swap(next);
  }
  if (work) *work += touched;
  // Members are never their own neighbors, so none survive the intersection.
  return candidates;
}

namespace {

ExtensionResult extend_impl(const Clique& clique, const ConflictGraph& graph,
                            DeadlinePoll& poll) {
  require_clique(clique, graph);
  ExtensionResult result;
  const std::vector<Node> candidates = common_neighbors(clique, graph, &result.pair_checks);
  if (candidates.empty()) {
    result.longest = clique;
    return result;
  }

  std::vector<std::vector<Node>> buckets;
  for (Node u : candidates) {
    const auto nbrs = graph.neighbors(u);
    bool joined = false;
    for (auto& bucket : buckets) {
      bool fits = true;
      for (Node w : bucket) {
        ++result.pair_checks;
        poll.tick();
        if (!std::binary_search(nbrs.begin(), nbrs.end(), w)) {
          fits = false;
          break;
        }
      }
      if (fits) {
        bucket.push_back(u);
        joined = true;
      }
    }
    if (!joined) buckets.push_back({u});
  }

  std::size_t best = 0;
  for (std::size_t b = 1; b < buckets.size(); ++b)
    if (buckets[b].size() > buckets[best].size()) best = b;

  result.longest = united(clique, buckets[best]);
  for (std::size_t b = 0; b < buckets.size(); ++b)
    if (b != best) result.others.push_back(united(clique, buckets[b]));
  return result;
}

}  // namespace

ExtensionResult extend_clique(const Clique& clique, const ConflictGraph& graph) {
  DeadlinePoll poll(nullptr);
  return extend_impl(clique, graph, poll);
}

ExtensionBatch extend_parallel(std::span<const Clique> cliques,
                               const ConflictGraph& graph, std::size_t k,
                               std::uint64_t seed,
                               const ExtensionOptions& options) {
  const Partition part = shuffle_partition(cliques.size(), k, seed);
  const std::size_t workers = std::min(k, std::max<std::size_t>(cliques.size(), 1));
  std::vector<ExtensionBatch> outputs(workers);

  fork_join(workers, [&](std::size_t w) {
    ExtensionBatch& out = outputs[w];
    std::size_t generated = 0;
    DeadlinePoll poll(options.deadline);
    for (std::size_t item : part.block(w)) {
      const Clique& base = cliques[item];
      if (generated >= options.per_worker_nnz_budget) {
        require_clique(base, graph);
        out.longest.push_back(base);
        ++out.passed_through;
        out.budget_hit = true;
        continue;
      }
      ExtensionResult r = extend_impl(base, graph, poll);
      out.pair_checks += r.pair_checks;
      generated += r.longest.size();
      for (const auto& c : r.others) generated += c.size();
      out.longest.push_back(std::move(r.longest));
      std::move(r.others.begin(), r.others.end(), std::back_inserter(out.others));
    }
  });

  ExtensionBatch batch;
  for (auto& out : outputs) {
    std::move(out.longest.begin(), out.longest.end(), std::back_inserter(batch.longest));
    std::move(out.others.begin(), out.others.end(), std::back_inserter(batch.others));
    batch.pair_checks += out.pair_checks;
    batch.passed_through += out.passed_through;
    batch.budget_hit = batch.budget_hit || out.budget_hit;
  }
  return batch;
}

}  // namespace cgp
