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

#include "cgp/clique.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cgp {

std::string_view to_string(CliqueSource source) {
  switch (source) {
    case CliqueSource::kOsp:
      return "osp";
    case CliqueSource::kIsp:
      return "isp";
    case CliqueSource::kKnapsackOrg:
      return "knapsack_org";
    case CliqueSource::kKnapsackOther:
      return "knapsack_other";
    case CliqueSource::kTrivialPair:
      return "trivial_pair";
  }
  return "?";
}

Clique make_clique(std::vector<Node> nodes, CliqueSource source) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.size() < 2)
    throw std::invalid_argument("a clique needs at least two distinct literals");
  return Clique{std::move(nodes), source};
}

bool node_list_less(const Clique& a, const Clique& b) {
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  return a.source < b.source;
}

BinaryIndex::BinaryIndex(const MipModel& model)
    : position_(model.num_cols(), -1) {
  for (std::int32_t j = 0; j < static_cast<std::int32_t>(model.num_cols()); ++j) {
    if (model.is_binary(j)) {
      position_[j] = static_cast<std::int32_t>(columns_.size());
      columns_.push_back(j);
    }
  }
}

Node BinaryIndex::node(const Literal& lit) const {
  if (!is_binary(lit.col))
    throw std::out_of_range("column " + std::to_string(lit.col) + " is not binary");
  const auto b = static_cast<Node>(position_[lit.col]);
  return lit.complemented ? b + static_cast<Node>(columns_.size()) : b;
}

Literal BinaryIndex::literal(Node node) const {
  const std::size_t nb = columns_.size();
  if (node >= 2 * nb) throw std::out_of_range("node index out of range");
  if (node < nb) return {columns_[node], false};
  return {columns_[node - nb], true};
}

std::vector<Literal> BinaryIndex::literals(std::span<const Node> nodes) const {
  std::vector<Literal> out;
  out.reserve(nodes.size());
  for (Node v : nodes) out.push_back(literal(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cgp
