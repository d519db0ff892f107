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

// Routing of tagged clique sets into model rows or the user-cut pool.
//
//   1. osp_long cliques replace the removed original set packing rows.
//   2. Every *_other clique becomes a user cut.
//   3. org_long is admitted when ||org_long|| <= NNZ, isp_long when
//      ||isp_long|| <= NNZ, other_long when clq_nnz + ||other_long|| <= NNZ,
//      where ||.|| counts literals and clq_nnz sums the cliques added so far.
//      Rejected sets become user cuts.
//   4. Admitted cliques are added one at a time while the added row count
//      stays within the post-detect row count; the rest become user cuts.

#ifndef CGP_TRIAGE_HPP_
#define CGP_TRIAGE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "cgp/clique.hpp"
#include "cgp/cut_pool.hpp"
#include "cgp/model.hpp"

namespace cgp {

struct TaggedClique {
  Clique clique;
  OriginTag origin = OriginTag::kOspLong;
  bool operator==(const TaggedClique&) const = default;
};

struct TriagePlan {
  std::vector<TaggedClique> replacements;
  std::vector<TaggedClique> as_constraints;
  std::vector<TaggedClique> as_user_cuts;
  std::size_t clq_nnz = 0;     // literals over as_constraints
  std::size_t model_nnz = 0;   // post-detect NNZ
  std::size_t model_rows = 0;  // post-detect row count
  /// Cliques admitted by the NNZ rule but demoted by the row budget.
  std::size_t budget_demoted = 0;
};

/// Literal count of every clique carrying `tag`.
std::size_t tag_nnz(std::span<const TaggedClique> pools, OriginTag tag);

/// Input order is preserved within each output list.
TriagePlan triage(std::span<const TaggedClique> pools, const MipModel& model);

/// The plan as a pool: replacements and as_constraints become
/// model_constraint cuts, the rest user cuts.
CutPool to_cut_pool(const TriagePlan& plan, const BinaryIndex& index);

}  // namespace cgp

#endif  // CGP_TRIAGE_HPP_
