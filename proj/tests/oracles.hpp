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

// Brute-force reference implementations and random instance generators used
// by the unit, property and acceptance tests. Nothing here calls into the
// algorithms under test; only the plain data types are shared.

#ifndef CGP_TESTS_ORACLES_HPP_
#define CGP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cgp/clique.hpp"
#include "cgp/cut_pool.hpp"
#include "cgp/model.hpp"
#include "cgp/parallel.hpp"

namespace oracle {

using cgp::Clique;
using cgp::MipModel;
using cgp::Node;
using cgp::RowEntry;
using cgp::RowSense;
using cgp::SplitMix64;

inline int uniform_int(SplitMix64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

inline bool coin(SplitMix64& rng, double p) { return rng.uniform() < p; }

// ---------------------------------------------------------------- knapsacks

/// Dense conflict matrix of a knapsack: pair (i, j) conflicts iff
/// a_i + a_j > b + tol.
inline std::vector<std::vector<char>> knapsack_conflicts(const std::vector<double>& a,
                                                         double b, double tol = 1e-9) {
  const std::size_t n = a.size();
  std::vector<std::vector<char>> g(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a[i] + a[j] > b + tol) g[i][j] = 1;
  return g;
}

inline bool is_clique(const std::vector<std::vector<char>>& g,
                      const std::vector<std::size_t>& members) {
  for (std::size_t x = 0; x < members.size(); ++x)
    for (std::size_t y = x + 1; y < members.size(); ++y)
      if (!g[members[x]][members[y]]) return false;
  return true;
}

inline bool is_maximal_clique(const std::vector<std::vector<char>>& g,
                              const std::vector<std::size_t>& members) {
  if (!is_clique(g, members)) return false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (std::find(members.begin(), members.end(), v) != members.end()) continue;
    bool all = true;
    for (std::size_t u : members) all = all && g[v][u];
    if (all) return false;
  }
  return true;
}

// ------------------------------------------------------------------- graphs

/// Dense symmetric adjacency over 2 * n_B nodes.
struct DenseGraph {
  std::size_t nodes = 0;
  std::vector<char> bits;
  explicit DenseGraph(std::size_t num_binaries)
      : nodes(2 * num_binaries), bits(nodes * nodes, 0) {}
  void set(Node u, Node v) {
    if (u == v) return;
    bits[u * nodes + v] = 1;
    bits[v * nodes + u] = 1;
  }
  bool get(Node u, Node v) const { return bits[u * nodes + v] != 0; }
  std::vector<std::pair<Node, Node>> edges() const {
    std::vector<std::pair<Node, Node>> out;
    for (Node u = 0; u < nodes; ++u)
      for (Node v = u + 1; v < nodes; ++v)
        if (get(u, v)) out.emplace_back(u, v);
    return out;
  }
};

/// Naive double-loop union of every clique's pairs, plus the complement
/// edges when `trivial` is set.
inline DenseGraph dense_union(const std::vector<Clique>& cliques, std::size_t num_binaries,
                              bool trivial) {
  DenseGraph g(num_binaries);
  for (const auto& q : cliques)
    for (std::size_t a = 0; a < q.nodes.size(); ++a)
      for (std::size_t b = a + 1; b < q.nodes.size(); ++b) g.set(q.nodes[a], q.nodes[b]);
  if (trivial)
    for (std::size_t j = 0; j < num_binaries; ++j)
      g.set(static_cast<Node>(j), static_cast<Node>(j + num_binaries));
  return g;
}

inline std::vector<Node> random_node_set(SplitMix64& rng, std::size_t num_nodes,
                                         std::size_t size) {
  std::set<Node> s;
  size = std::min(size, num_nodes);
  while (s.size() < size) s.insert(static_cast<Node>(rng.below(num_nodes)));
  return {s.begin(), s.end()};
}

/// Random cliques over all 2 * n_B nodes, sizes in [2, max_size].
inline std::vector<Clique> random_cliques(SplitMix64& rng, std::size_t num_binaries,
                                          std::size_t count, std::size_t max_size) {
  std::vector<Clique> out;
  for (std::size_t c = 0; c < count; ++c) {
    const auto size = static_cast<std::size_t>(uniform_int(rng, 2, static_cast<int>(max_size)));
    out.push_back(Clique{random_node_set(rng, 2 * num_binaries, size), cgp::CliqueSource::kOsp});
  }
  return out;
}

// -------------------------------------------------------------------- merge

/// Naive O(m^2) domination oracle: j survives unless some i holds a strict
/// superset of it, or an equal set at a smaller index.
inline std::vector<std::size_t> naive_antichain(const std::vector<Clique>& cliques) {
  std::vector<std::set<Node>> sets;
  for (const auto& q : cliques) sets.emplace_back(q.nodes.begin(), q.nodes.end());
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    bool removed = false;
    for (std::size_t i = 0; i < sets.size() && !removed; ++i) {
      if (i == j) continue;
      const bool subset = std::includes(sets[i].begin(), sets[i].end(), sets[j].begin(),
                                        sets[j].end());
      if (!subset) continue;
      if (sets[i].size() > sets[j].size() || i < j) removed = true;
    }
    if (!removed) kept.push_back(j);
  }
  return kept;
}

/// Same oracle on 64-bit masks (all nodes < 64), for large pools.
inline std::vector<std::size_t> naive_antichain_masks(const std::vector<Clique>& cliques) {
  std::vector<std::uint64_t> mask(cliques.size(), 0);
  std::vector<int> size(cliques.size(), 0);
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    for (Node v : cliques[i].nodes) mask[i] |= std::uint64_t{1} << v;
    size[i] = static_cast<int>(cliques[i].nodes.size());
  }
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < cliques.size(); ++j) {
    bool removed = false;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      if (i == j || (mask[j] & ~mask[i]) != 0) continue;
      if (size[i] > size[j] || i < j) {
        removed = true;
        break;
      }
    }
    if (!removed) kept.push_back(j);
  }
  return kept;
}

// ---------------------------------------------------------------------- MIP

/// Column domains of a pure-integer model as explicit value lists.
inline std::vector<std::vector<double>> integer_domains(const MipModel& m) {
  std::vector<std::vector<double>> dom(m.num_cols());
  for (std::size_t j = 0; j < m.num_cols(); ++j)
    for (double v = std::ceil(m.lower[j]); v <= m.upper[j]; v += 1.0) dom[j].push_back(v);
  return dom;
}

inline bool row_satisfied(const MipModel& m, std::size_t i, const std::vector<double>& x,
                          double tol = 1e-9) {
  double act = 0.0;
  for (const RowEntry& e : m.rows[i]) act += e.coef * x[e.col];
  switch (m.senses[i]) {
    case RowSense::kLessEqual: return act <= m.rhs[i] + tol;
    case RowSense::kGreaterEqual: return act >= m.rhs[i] - tol;
    case RowSense::kEqual: return std::fabs(act - m.rhs[i]) <= tol;
  }
  return false;
}

inline bool feasible(const MipModel& m, const std::vector<double>& x, double tol = 1e-9) {
  for (std::size_t j = 0; j < m.num_cols(); ++j)
    if (x[j] < m.lower[j] - tol || x[j] > m.upper[j] + tol) return false;
  for (std::size_t i = 0; i < m.num_rows(); ++i)
    if (!row_satisfied(m, i, x, tol)) return false;
  return true;
}

inline bool cut_satisfied(const std::vector<cgp::Literal>& lits, const std::vector<double>& x) {
  double sum = 0.0;
  for (const auto& l : lits) sum += l.complemented ? 1.0 - x[l.col] : x[l.col];
  return sum <= 1.0 + 1e-9;
}

/// Calls fn(x) for every integer point of the box given by `domains`.
template <class Fn>
void enumerate_points(const std::vector<std::vector<double>>& domains, Fn&& fn) {
  const std::size_t n = domains.size();
  for (const auto& d : domains)
    if (d.empty()) return;
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = domains[j][0];
  for (;;) {
    fn(x);
    std::size_t j = 0;
    while (j < n) {
      if (++idx[j] < domains[j].size()) {
        x[j] = domains[j][idx[j]];
        break;
      }
      idx[j] = 0;
      x[j] = domains[j][0];
      ++j;
    }
    if (j == n) return;
  }
}

/// Pure-integer random MIP: `binaries` 0/1 columns plus up to two small
/// general-integer columns, rows drawn from set packing, knapsack,
/// mixed-sign, equality, singleton and general-integer templates.
inline MipModel random_mip(SplitMix64& rng, int min_bin = 2, int max_bin = 12,
                           int max_rows = 8) {
  MipModel m;
  m.name = "RANDOM";
  const int nb = uniform_int(rng, min_bin, max_bin);
  const int ni = uniform_int(rng, 0, 2);
  for (int j = 0; j < nb; ++j)
    m.add_column("b" + std::to_string(j), uniform_int(rng, -5, 5), 0.0, 1.0, true);
  for (int j = 0; j < ni; ++j) {
    const double lo = coin(rng, 0.5) ? -1.0 : 0.0;
    m.add_column("z" + std::to_string(j), uniform_int(rng, -3, 3), lo, 2.0, true);
  }
  auto pick = [&](int count) {
    std::vector<Node> cols = random_node_set(rng, static_cast<std::size_t>(nb),
                                             static_cast<std::size_t>(count));
    return cols;
  };
  const int rows = uniform_int(rng, 1, max_rows);
  for (int r = 0; r < rows; ++r) {
    const std::string name = "r" + std::to_string(r);
    std::vector<RowEntry> e;
    const int kind = uniform_int(rng, 0, 6);
    if (kind == 0) {  // set packing, possibly scaled or negated
      const double c = uniform_int(rng, 1, 3);
      for (Node j : pick(uniform_int(rng, 2, std::min(nb, 5))))
        e.push_back({static_cast<std::int32_t>(j), c});
      if (coin(rng, 0.3)) {
        for (auto& t : e) t.coef = -t.coef;
        m.add_row(name, RowSense::kGreaterEqual, -c, e);
      } else {
        m.add_row(name, RowSense::kLessEqual, c, e);
      }
    } else if (kind == 1 || kind == 2) {  // knapsack
      double sum = 0.0;
      for (Node j : pick(uniform_int(rng, 2, std::min(nb, 7)))) {
        const double a = uniform_int(rng, 1, 9);
        sum += a;
        e.push_back({static_cast<std::int32_t>(j), a});
      }
      m.add_row(name, RowSense::kLessEqual, uniform_int(rng, 1, static_cast<int>(sum)), e);
    } else if (kind == 3) {  // mixed sign
      double neg = 0.0;
      for (Node j : pick(uniform_int(rng, 2, std::min(nb, 6)))) {
        double a = uniform_int(rng, 1, 6);
        if (coin(rng, 0.4)) a = -a;
        if (a < 0) neg += a;
        e.push_back({static_cast<std::int32_t>(j), a});
      }
      const int b = uniform_int(rng, static_cast<int>(neg), 6);
      m.add_row(name, coin(rng, 0.5) ? RowSense::kLessEqual : RowSense::kGreaterEqual, b, e);
    } else if (kind == 4) {  // assignment
      for (Node j : pick(uniform_int(rng, 2, std::min(nb, 3))))
        e.push_back({static_cast<std::int32_t>(j), 1.0});
      m.add_row(name, RowSense::kEqual, 1.0, e);
    } else if (kind == 5) {  // singleton
      const auto j = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(nb)));
      m.add_row(name, RowSense::kLessEqual, uniform_int(rng, 0, 3),
                {{j, static_cast<double>(uniform_int(rng, 1, 4))}});
    } else {  // binaries coupled with a general integer
      for (Node j : pick(uniform_int(rng, 2, std::min(nb, 4))))
        e.push_back({static_cast<std::int32_t>(j), static_cast<double>(uniform_int(rng, 1, 5))});
      if (ni > 0)
        e.push_back({static_cast<std::int32_t>(nb + uniform_int(rng, 0, ni - 1)),
                     static_cast<double>(uniform_int(rng, -3, 3))});
      m.add_row(name, RowSense::kLessEqual, uniform_int(rng, 1, 8), e);
    }
  }
  return m;
}

}  // namespace oracle

#endif  // CGP_TESTS_ORACLES_HPP_
