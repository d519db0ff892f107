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

#include "cgp/clique_detection.hpp"

#include <algorithm>
#include <stdexcept>

#include "cgp/parallel.hpp"

namespace cgp {

namespace {

bool conflicts(double a, double b, double rhs) {
  return a + b > rhs + kConflictTolerance;
}

// Smallest position in [lo, hi) satisfying a monotone predicate, or hi.
template <class Pred>
std::uint32_t first_true(std::uint32_t lo, std::uint32_t hi, Pred pred,
                         std::size_t& work) {
  while (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    ++work;
    if (pred(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

}  // namespace

KnapsackCliques detect_cliques(const PureBinaryConstraint& pbc) {
  if (!pbc.is_sorted())
    throw std::invalid_argument("detect_cliques: knapsack terms are not sorted");
  KnapsackCliques out;
  const auto& t = pbc.terms;
  const auto n = static_cast<std::uint32_t>(t.size());
  out.work = n;
  if (n < 2) return out;
  const double b = pbc.rhs;
  out.work += 2;
  if (!conflicts(t[n - 2].coef, t[n - 1].coef, b)) return out;

  // a_p + a_{p+1} is non-decreasing in p.
  const std::uint32_t phi = first_true(
      0, n - 1, [&](std::uint32_t p) { return conflicts(t[p].coef, t[p + 1].coef, b); },
      out.work);
  out.org_begin = phi;

  for (std::uint32_t i = phi; i-- > 0;) {
    const double ai = t[i].coef;
    const std::uint32_t sigma = first_true(
        i + 1, n, [&](std::uint32_t s) { return conflicts(ai, t[s].coef, b); }, out.work);
    if (sigma == n) break;
    out.others.push_back({i, sigma});
  }
  return out;
}

std::vector<std::uint32_t> org_positions(const PureBinaryConstraint& pbc,
                                         const KnapsackCliques& found) {
  std::vector<std::uint32_t> pos;
  if (!found.org_begin) return pos;
  for (auto p = *found.org_begin; p < pbc.terms.size(); ++p) pos.push_back(p);
  return pos;
}

std::vector<std::uint32_t> other_positions(const PureBinaryConstraint& pbc,
                                           const SuffixClique& clique) {
  std::vector<std::uint32_t> pos{clique.head};
  for (auto p = clique.suffix_begin; p < pbc.terms.size(); ++p) pos.push_back(p);
  return pos;
}

Clique CliqueHarvest::materialize(const OtherCliqueRef& ref) const {
  const auto& nodes = knapsack_nodes.at(ref.knapsack);
  std::vector<Node> members{nodes.at(ref.clique.head)};
  members.insert(members.end(), nodes.begin() + ref.clique.suffix_begin, nodes.end());
  return make_clique(std::move(members), CliqueSource::kKnapsackOther);
}

std::vector<Clique> CliqueHarvest::materialize_other() const {
  std::vector<Clique> out;
  out.reserve(other.size());
  for (const auto& ref : other) out.push_back(materialize(ref));
  return out;
}

CliqueHarvest detect_cliques_parallel(std::span<const PureBinaryConstraint> ck,
                                      const BinaryIndex& index, std::size_t k,
                                      std::uint64_t seed,
                                      const Deadline* deadline) {
  const Partition part = shuffle_partition(ck.size(), k, seed);
  struct WorkerOutput {
    std::vector<Clique> org;
    std::vector<std::uint32_t> org_knapsack;
    std::vector<OtherCliqueRef> other;
    std::vector<std::pair<std::uint32_t, std::vector<Node>>> nodes;
    std::size_t work = 0;
  };
  std::vector<WorkerOutput> outputs(k);

  fork_join(std::min(k, std::max<std::size_t>(ck.size(), 1)), [&](std::size_t w) {
    WorkerOutput& out = outputs[w];
    DeadlinePoll poll(deadline);
    for (std::size_t item : part.block(w)) {
      poll.tick();
      const auto& pbc = ck[item];
      const auto idx = static_cast<std::uint32_t>(item);
      KnapsackCliques found = detect_cliques(pbc);
      out.work += found.work;
      std::vector<Node> nodes;
      nodes.reserve(pbc.terms.size());
      for (const auto& term : pbc.terms) nodes.push_back(index.node(term.literal));
      if (found.org_begin) {
        std::vector<Node> members(nodes.begin() + *found.org_begin, nodes.end());
        out.org.push_back(make_clique(std::move(members), CliqueSource::kKnapsackOrg));
        out.org_knapsack.push_back(idx);
      }
      for (const auto& s : found.others) out.other.push_back({idx, s});
      out.nodes.emplace_back(idx, std::move(nodes));
    }
  });

  CliqueHarvest harvest;
  harvest.knapsack_nodes.resize(ck.size());
  for (auto& out : outputs) {
    harvest.org.insert(harvest.org.end(), std::make_move_iterator(out.org.begin()),
                       std::make_move_iterator(out.org.end()));
    harvest.org_knapsack.insert(harvest.org_knapsack.end(), out.org_knapsack.begin(),
                                out.org_knapsack.end());
    harvest.other.insert(harvest.other.end(), out.other.begin(), out.other.end());
    for (auto& [idx, nodes] : out.nodes) harvest.knapsack_nodes[idx] = std::move(nodes);
    harvest.work += out.work;
  }
  return harvest;
}

}  // namespace cgp
