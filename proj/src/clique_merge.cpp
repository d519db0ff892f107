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

#include "cgp/clique_merge.hpp"

#include <algorithm>
#include <numeric>

namespace cgp {

namespace {

std::uint64_t signature(const Clique& q) {
  std::uint64_t mask = 0;
  for (Node v : q.nodes) mask |= std::uint64_t{1} << (v % 64);
  return mask;
}

// Stable orderings that decide which of two cliques may remove the other:
// i may remove j when j is a subset of i and i precedes j here.
bool precedes(const Clique& a, std::size_t ia, const Clique& b, std::size_t ib) {
  if (a.size() != b.size()) return a.size() > b.size();
  return ia < ib;
}

}  // namespace

bool dominates(const Clique& q1, const Clique& q2, std::size_t* work) {
  if (q2.size() > q1.size()) return false;
  std::size_t i = 0;
  std::size_t steps = 0;
  bool ok = true;
  for (Node v : q2.nodes) {
    while (i < q1.nodes.size() && q1.nodes[i] < v) {
      ++i;
      ++steps;
    }
    ++steps;
    if (i == q1.nodes.size() || q1.nodes[i] != v) {
      ok = false;
      break;
    }
    ++i;
  }
  if (work) *work += steps;
  return ok;
}

MergeOutcome merge_parallel(std::span<const Clique> cliques, std::size_t k,
                            const Deadline* deadline) {
  const std::size_t m = cliques.size();
  MergeOutcome out;
  out.dominator.assign(m, kNoDominator);
  if (m == 0) return out;

  Node max_node = 0;
  for (const auto& q : cliques)
    if (!q.nodes.empty()) max_node = std::max(max_node, q.nodes.back());

  // Inverted index, each list ordered longest first so dominators come early.
  std::vector<std::vector<std::size_t>> holders(static_cast<std::size_t>(max_node) + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (Node v : cliques[i].nodes) holders[v].push_back(i);
  for (auto& list : holders)
    std::stable_sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      return cliques[a].size() > cliques[b].size();
    });

  std::vector<std::uint64_t> sig(m);
  for (std::size_t i = 0; i < m; ++i) sig[i] = signature(cliques[i]);

  const std::vector<IndexRange> blocks = even_blocks(m, k);
  const std::size_t workers = std::min(k, m);
  std::vector<std::vector<std::size_t>> found(workers);
  std::vector<std::size_t> scans(workers, 0);

  fork_join(workers, [&](std::size_t w) {
    const IndexRange r = blocks[w];
    std::vector<std::size_t>& mine = found[w];
    mine.assign(r.size(), kNoDominator);
    std::size_t work = 0;
    DeadlinePoll poll(deadline);
    for (std::size_t j = r.begin; j < r.end; ++j) {
      const Clique& qj = cliques[j];
      if (qj.nodes.empty()) continue;
      Node rarest = qj.nodes.front();
      for (Node v : qj.nodes)
        if (holders[v].size() < holders[rarest].size()) rarest = v;
      for (std::size_t i : holders[rarest]) {
        poll.tick();
        if (i == j) continue;
        const Clique& qi = cliques[i];
        if (qi.size() < qj.size()) break;
        if (!precedes(qi, i, qj, j)) continue;
        if (qi.nodes.front() > qj.nodes.front() || qi.nodes.back() < qj.nodes.back())
          continue;
        if ((sig[j] & ~sig[i]) != 0) continue;
        if (dominates(qi, qj, &work)) {
          mine[j - r.begin] = i;
          break;
        }
      }
    }
    scans[w] = work;
  });

  std::vector<std::size_t> direct(m, kNoDominator);
  for (std::size_t w = 0; w < workers; ++w) {
    const IndexRange r = blocks[w];
    std::copy(found[w].begin(), found[w].end(), direct.begin() + static_cast<std::ptrdiff_t>(r.begin));
    out.subset_scans += scans[w];
    out.max_worker_scans = std::max(out.max_worker_scans, scans[w]);
  }

  // Follow dominator chains to a survivor. Each step strictly advances in the
  // (longer, then smaller index) order, so chains terminate.
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t d = direct[j];
    while (d != kNoDominator && direct[d] != kNoDominator) d = direct[d];
    out.dominator[j] = d;
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (out.dominator[j] == kNoDominator) {
      out.kept.push_back(cliques[j]);
      out.kept_index.push_back(j);
    } else {
      ++out.removed_count;
    }
  }
  return out;
}

}  // namespace cgp
