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

#include "cgp/triage.hpp"

namespace cgp {

namespace {

bool is_other(OriginTag tag) {
  return tag == OriginTag::kOspOther || tag == OriginTag::kIspOther ||
         tag == OriginTag::kOrgOther || tag == OriginTag::kOtherOther;
}

}  // namespace

std::size_t tag_nnz(std::span<const TaggedClique> pools, OriginTag tag) {
  std::size_t total = 0;
  for (const auto& t : pools)
    if (t.origin == tag) total += t.clique.size();
  return total;
}

TriagePlan triage(std::span<const TaggedClique> pools, const MipModel& model) {
  TriagePlan plan;
  plan.model_nnz = model.nnz();
  plan.model_rows = model.num_rows();

  for (const auto& t : pools) {
    if (t.origin == OriginTag::kOspLong)
      plan.replacements.push_back(t);
    else if (is_other(t.origin))
      plan.as_user_cuts.push_back(t);
  }

  auto admit = [&](OriginTag tag, std::size_t set_nnz) {
    const bool accepted = set_nnz <= plan.model_nnz;
    for (const auto& t : pools) {
      if (t.origin != tag) continue;
      if (accepted && plan.as_constraints.size() < plan.model_rows) {
        plan.as_constraints.push_back(t);
        plan.clq_nnz += t.clique.size();
      } else {
        if (accepted) ++plan.budget_demoted;
        plan.as_user_cuts.push_back(t);
      }
    }
  };
  admit(OriginTag::kOrgLong, tag_nnz(pools, OriginTag::kOrgLong));
  admit(OriginTag::kIspLong, tag_nnz(pools, OriginTag::kIspLong));
  admit(OriginTag::kOtherLong, plan.clq_nnz + tag_nnz(pools, OriginTag::kOtherLong));
  return plan;
}

CutPool to_cut_pool(const TriagePlan& plan, const BinaryIndex& index) {
  CutPool pool;
  auto emit = [&](const std::vector<TaggedClique>& list, Disposition d) {
    for (const auto& t : list)
      pool.cuts.push_back({index.literals(t.clique.nodes), t.origin, d});
  };
  emit(plan.replacements, Disposition::kModelConstraint);
  emit(plan.as_constraints, Disposition::kModelConstraint);
  emit(plan.as_user_cuts, Disposition::kUserCut);
  return pool;
}

}  // namespace cgp
