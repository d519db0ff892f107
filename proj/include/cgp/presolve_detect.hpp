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

// Single-pass presolve that finds set packing rows and conflicting knapsacks.
//
// Every <= row (>= rows are negated, = rows split into both halves) is
// rewritten onto binary literals with nonnegative coefficients:
//
//   sum_{a_j > 0} a_j x_j + sum_{a_j < 0} |a_j| (1 - x_j)
//       <= b - inf{ sum_{j non-binary} a_j x_j } + sum_{a_j < 0} |a_j|
//
// A rewrite whose non-binary infimum is -inf carries no conflict and is
// skipped.

#ifndef CGP_PRESOLVE_DETECT_HPP_
#define CGP_PRESOLVE_DETECT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgp/model.hpp"

namespace cgp {

/// Absolute slack on every conflict test: a pair conflicts only when
/// a_i + a_j > rhs + kConflictTolerance.
inline constexpr double kConflictTolerance = 1e-9;

struct PbcTerm {
  Literal literal;
  double coef = 0.0;
};

/// Knapsack over literals: sum coef * literal <= rhs, coefficients positive
/// and sorted non-decreasing (ties by column, then plain before complement).
struct PureBinaryConstraint {
  std::vector<PbcTerm> terms;
  double rhs = 0.0;
  std::int32_t source_row = -1;

  void sort_terms();
  bool is_sorted() const;
};

enum class PbcClass { kSetPacking, kConflictingKnapsack, kSingleton, kInert };

std::string_view to_string(PbcClass c);

class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(std::int32_t row)
      : std::runtime_error("row " + std::to_string(row) + " is infeasible"),
        row_(row) {}
  std::int32_t row() const { return row_; }

 private:
  std::int32_t row_;
};

struct Fixing {
  std::int32_t col = 0;
  double value = 0.0;
};

struct DetectionResult {
  MipModel model;  // original set packing rows removed, bounds updated
  std::vector<PureBinaryConstraint> osp;
  std::vector<PureBinaryConstraint> isp;
  std::vector<PureBinaryConstraint> ck;
  std::vector<Fixing> fixings;  // originally-binary columns now fixed
  std::size_t coefficient_work = 0;  // stored coefficients read
};

/// One round of single-row activity-based bound tightening. Empty rows are
/// dropped, singleton rows folded into bounds and dropped; integer bounds are
/// rounded inward. Throws InfeasibleError (original row index) when a row's
/// minimum activity exceeds its rhs or bounds cross.
MipModel strengthen_bounds_once(MipModel model, std::size_t* work = nullptr);

/// Rewrite of `row` as a knapsack over literals using the model's current
/// bounds. >= rows are negated; = rows must be split by the caller
/// (std::invalid_argument).
std::optional<PureBinaryConstraint> to_pbc(const MipModel& model,
                                           std::int32_t row);

/// Same rewrite for the row `sign * entries <= rhs`.
std::optional<PureBinaryConstraint> to_pbc(std::span<const RowEntry> entries,
                                           double sign, double rhs,
                                           const MipModel& bounds,
                                           std::int32_t source_row,
                                           std::size_t* work = nullptr);

/// Singleton: one term. SetPacking: >= 2 terms, all coefficients equal to
/// some a with a <= rhs < 2a. ConflictingKnapsack: the two largest
/// coefficients conflict. Inert otherwise. Requires sorted terms.
PbcClass classify(const PureBinaryConstraint& pbc);

DetectionResult detect(MipModel model);

}  // namespace cgp

#endif  // CGP_PRESOLVE_DETECT_HPP_
