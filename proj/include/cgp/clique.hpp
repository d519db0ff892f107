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

// Literal nodes and cliques over the 2 * n_B node set of the conflict graph.
//
// With the model's binary columns numbered 0..n_B-1 in column order, literal
// x_b maps to node b and its complement to node b + n_B.

#ifndef CGP_CLIQUE_HPP_
#define CGP_CLIQUE_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cgp/model.hpp"

namespace cgp {

using Node = std::uint32_t;

enum class CliqueSource : std::uint8_t {
  kOsp,
  kIsp,
  kKnapsackOrg,
  kKnapsackOther,
  kTrivialPair,
};

std::string_view to_string(CliqueSource source);

/// Sorted, duplicate-free node list asserting pairwise conflict.
struct Clique {
  std::vector<Node> nodes;
  CliqueSource source = CliqueSource::kOsp;

  std::size_t size() const { return nodes.size(); }
  bool operator==(const Clique&) const = default;
};

/// Sorts and deduplicates; throws std::invalid_argument for fewer than two
/// distinct nodes.
Clique make_clique(std::vector<Node> nodes, CliqueSource source);

/// Strict weak order on node lists (lexicographic), used for canonical output.
bool node_list_less(const Clique& a, const Clique& b);

class BinaryIndex {
 public:
  BinaryIndex() = default;
  explicit BinaryIndex(const MipModel& model);

  std::size_t num_binaries() const { return columns_.size(); }
  std::size_t num_nodes() const { return 2 * columns_.size(); }

  bool is_binary(std::int32_t col) const {
    return col >= 0 && static_cast<std::size_t>(col) < position_.size() &&
           position_[col] >= 0;
  }
  std::int32_t column(std::size_t binary) const { return columns_.at(binary); }

  /// Throws std::out_of_range when the literal's column is not binary.
  Node node(const Literal& lit) const;
  Literal literal(Node node) const;

  std::vector<Literal> literals(std::span<const Node> nodes) const;

 private:
  std::vector<std::int32_t> columns_;
  std::vector<std::int32_t> position_;
};

}  // namespace cgp

#endif  // CGP_CLIQUE_HPP_
