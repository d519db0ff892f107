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

#include "cgp/presolve_detect.hpp"

#include <algorithm>
#include <cmath>

namespace cgp {

namespace {

constexpr double kBoundTolerance = 1e-9;

double feas_tol(double b) { return 1e-9 * std::max(1.0, std::fabs(b)); }

bool term_less(const PbcTerm& a, const PbcTerm& b) {
  if (a.coef != b.coef) return a.coef < b.coef;
  return a.literal < b.literal;
}

void count(std::size_t* work, std::size_t n) {
  if (work) *work += n;
}

// Tightens bounds from sign * entries <= b. Contributions are taken from the
// bounds at entry; a tightened upper bound never feeds back into the minimum
// activity of the same row.
void tighten_row(MipModel& m, std::span<const RowEntry> entries, double sign,
                 double b, std::int32_t source_row, std::size_t* work) {
  double finite = 0.0;
  std::size_t num_inf = 0;
  std::size_t inf_pos = 0;
  for (std::size_t t = 0; t < entries.size(); ++t) {
    const double c = sign * entries[t].coef;
    const double bound = c > 0 ? m.lower[entries[t].col] : m.upper[entries[t].col];
    if (std::isinf(bound)) {
      ++num_inf;
      inf_pos = t;
    } else {
      finite += c * bound;
    }
  }
  count(work, entries.size());
  if (num_inf == 0 && finite > b + feas_tol(b)) throw InfeasibleError(source_row);
  if (num_inf >= 2) return;

  for (std::size_t t = 0; t < entries.size(); ++t) {
    if (num_inf == 1 && t != inf_pos) continue;
    const std::int32_t j = entries[t].col;
    const double c = sign * entries[t].coef;
    double residual = finite;
    if (num_inf == 0) residual -= c * (c > 0 ? m.lower[j] : m.upper[j]);
    const double slack = b - residual;
    double& lo = m.lower[j];
    double& up = m.upper[j];
    // Adding +0.0 turns a negative zero into a positive one.
    if (c > 0) {
      double nu = slack / c;
      if (m.is_integer(j)) nu = std::floor(nu + kBoundTolerance);
      if (nu < up - kBoundTolerance * std::max(1.0, std::fabs(nu))) up = nu + 0.0;
    } else {
      double nl = slack / c;
      if (m.is_integer(j)) nl = std::ceil(nl - kBoundTolerance);
      if (nl > lo + kBoundTolerance * std::max(1.0, std::fabs(nl))) lo = nl + 0.0;
    }
    if (lo > up) {
      if (lo - up > feas_tol(up)) throw InfeasibleError(source_row);
      lo = up;
    }
  }
  count(work, entries.size());
}

bool zero_row_feasible(RowSense sense, double b) {
  switch (sense) {
    case RowSense::kLessEqual:
      return 0.0 <= b + feas_tol(b);
    case RowSense::kGreaterEqual:
      return 0.0 >= b - feas_tol(b);
    case RowSense::kEqual:
      return std::fabs(b) <= feas_tol(b);
  }
  return true;
}

std::vector<double> halves(RowSense sense) {
  switch (sense) {
    case RowSense::kLessEqual:
      return {1.0};
    case RowSense::kGreaterEqual:
      return {-1.0};
    case RowSense::kEqual:
      return {1.0, -1.0};
  }
  return {};
}

// Returns the source row indices of the rows that survive.
std::vector<std::int32_t> strengthen_in_place(MipModel& m, std::size_t* work) {
  std::vector<char> drop(m.num_rows(), 0);
  for (std::size_t i = 0; i < m.num_rows(); ++i) {
    const auto row = static_cast<std::int32_t>(i);
    const auto& entries = m.rows[i];
    if (entries.empty()) {
      if (!zero_row_feasible(m.senses[i], m.rhs[i])) throw InfeasibleError(row);
      drop[i] = 1;
      continue;
    }
    for (double sign : halves(m.senses[i]))
      tighten_row(m, entries, sign, sign * m.rhs[i], row, work);
    if (entries.size() == 1) drop[i] = 1;
  }
  std::vector<std::int32_t> kept;
  for (std::size_t i = 0; i < m.num_rows(); ++i)
    if (!drop[i]) kept.push_back(static_cast<std::int32_t>(i));
  m.erase_rows(drop);
  return kept;
}

bool is_original_set_packing(const MipModel& m, std::size_t i, double sign,
                             std::size_t* work) {
  const auto& entries = m.rows[i];
  count(work, entries.size());
  if (entries.size() < 2) return false;
  const double a = sign * entries.front().coef;
  if (a <= 0.0) return false;
  for (const auto& e : entries) {
    if (!m.is_binary(e.col)) return false;
    const double c = sign * e.coef;
    if (std::fabs(c - a) > kConflictTolerance * std::max(1.0, a)) return false;
  }
  const double b = sign * m.rhs[i];
  return a <= b + kConflictTolerance && 2.0 * a > b + kConflictTolerance;
}

PureBinaryConstraint osp_constraint(const MipModel& m, std::size_t i, double sign,
                                    std::int32_t source_row) {
  PureBinaryConstraint pbc;
  pbc.rhs = sign * m.rhs[i];
  pbc.source_row = source_row;
  for (const auto& e : m.rows[i]) pbc.terms.push_back({{e.col, false}, sign * e.coef});
  pbc.sort_terms();
  return pbc;
}

double literal_value(const MipModel& m, const Literal& lit) {
  return lit.complemented ? 1.0 - m.lower[lit.col] : m.lower[lit.col];
}

}  // namespace

std::string_view to_string(PbcClass c) {
  switch (c) {
    case PbcClass::kSetPacking:
      return "set_packing";
    case PbcClass::kConflictingKnapsack:
      return "conflicting_knapsack";
    case PbcClass::kSingleton:
      return "singleton";
    case PbcClass::kInert:
      return "inert";
  }
  return "?";
}

void PureBinaryConstraint::sort_terms() {
  std::sort(terms.begin(), terms.end(), term_less);
}

bool PureBinaryConstraint::is_sorted() const {
  return std::is_sorted(terms.begin(), terms.end(), term_less);
}

MipModel strengthen_bounds_once(MipModel model, std::size_t* work) {
  strengthen_in_place(model, work);
  return model;
}

std::optional<PureBinaryConstraint> to_pbc(std::span<const RowEntry> entries,
                                           double sign, double rhs,
                                           const MipModel& bounds,
                                           std::int32_t source_row,
                                           std::size_t* work) {
  PureBinaryConstraint pbc;
  pbc.source_row = source_row;
  double b = rhs;
  count(work, entries.size());
  for (const auto& e : entries) {
    const double c = sign * e.coef;
    if (c == 0.0) continue;
    if (bounds.is_binary(e.col)) {
      if (c > 0) {
        pbc.terms.push_back({{e.col, false}, c});
      } else {
        pbc.terms.push_back({{e.col, true}, -c});
        b -= c;
      }
      continue;
    }
    const double bound = c > 0 ? bounds.lower[e.col] : bounds.upper[e.col];
    if (std::isinf(bound)) return std::nullopt;
    b -= c * bound;
  }
  pbc.rhs = b;
  pbc.sort_terms();
  return pbc;
}

std::optional<PureBinaryConstraint> to_pbc(const MipModel& model,
                                           std::int32_t row) {
  const RowSense sense = model.senses.at(row);
  if (sense == RowSense::kEqual)
    throw std::invalid_argument("to_pbc: split equality rows before rewriting");
  const double sign = sense == RowSense::kLessEqual ? 1.0 : -1.0;
  return to_pbc(model.rows[row], sign, sign * model.rhs[row], model, row);
}

PbcClass classify(const PureBinaryConstraint& pbc) {
  if (!pbc.is_sorted()) throw std::invalid_argument("classify: terms not sorted");
  const auto& t = pbc.terms;
  if (t.size() == 1) return PbcClass::kSingleton;
  if (t.size() < 2) return PbcClass::kInert;
  const double lo = t.front().coef;
  const double hi = t.back().coef;
  const double top_pair = t[t.size() - 2].coef + hi;
  if (top_pair <= pbc.rhs + kConflictTolerance) return PbcClass::kInert;
  const bool uniform = hi - lo <= kConflictTolerance * std::max(1.0, hi);
  if (uniform && lo <= pbc.rhs + kConflictTolerance) return PbcClass::kSetPacking;
  return PbcClass::kConflictingKnapsack;
}

DetectionResult detect(MipModel model) {
  DetectionResult res;
  const std::vector<char> binary_at_input = [&] {
    std::vector<char> b(model.num_cols());
    for (std::size_t j = 0; j < b.size(); ++j) b[j] = model.is_binary(static_cast<std::int32_t>(j));
    return b;
  }();

  std::size_t work = 0;
  const std::vector<std::int32_t> origin = strengthen_in_place(model, &work);
  std::vector<char> binary_at_pass(model.num_cols());
  for (std::size_t j = 0; j < binary_at_pass.size(); ++j)
    binary_at_pass[j] = model.is_binary(static_cast<std::int32_t>(j));

  std::vector<char> remove(model.num_rows(), 0);
  std::vector<std::size_t> osp_rows;
  for (std::size_t i = 0; i < model.num_rows(); ++i) {
    const RowSense sense = model.senses[i];
    if (sense != RowSense::kEqual) {
      const double sign = sense == RowSense::kLessEqual ? 1.0 : -1.0;
      if (is_original_set_packing(model, i, sign, &work)) {
        res.osp.push_back(osp_constraint(model, i, sign, origin[i]));
        osp_rows.push_back(i);
        remove[i] = 1;
        continue;
      }
    }
    for (double sign : halves(sense)) {
      auto pbc = to_pbc(model.rows[i], sign, sign * model.rhs[i], model, origin[i], &work);
      if (!pbc) continue;
      switch (classify(*pbc)) {
        case PbcClass::kSingleton: {
          const PbcTerm& t = pbc->terms.front();
          if (pbc->rhs < -kConflictTolerance) throw InfeasibleError(origin[i]);
          if (t.coef > pbc->rhs + kConflictTolerance) {
            // The literal must be 0.
            if (t.literal.complemented) model.lower[t.literal.col] = 1.0;
            else model.upper[t.literal.col] = 0.0;
          }
          break;
        }
        case PbcClass::kSetPacking:
          res.isp.push_back(std::move(*pbc));
          break;
        case PbcClass::kConflictingKnapsack:
          res.ck.push_back(std::move(*pbc));
          break;
        case PbcClass::kInert:
          break;
      }
    }
  }

  // Columns fixed by singleton rewrites during the pass may still appear in
  // constraints collected earlier. Original set packing rows touching them go
  // back into the model; inferred constraints absorb the fixed value.
  auto fixed_in_pass = [&](std::int32_t col) {
    return binary_at_pass[col] && !model.is_binary(col);
  };
  auto touches_fixed = [&](const PureBinaryConstraint& pbc) {
    return std::any_of(pbc.terms.begin(), pbc.terms.end(),
                       [&](const PbcTerm& t) { return fixed_in_pass(t.literal.col); });
  };
  {
    std::vector<PureBinaryConstraint> kept;
    for (std::size_t s = 0; s < res.osp.size(); ++s) {
      if (touches_fixed(res.osp[s])) remove[osp_rows[s]] = 0;
      else kept.push_back(std::move(res.osp[s]));
    }
    res.osp = std::move(kept);
  }
  {
    std::vector<PureBinaryConstraint> isp;
    std::vector<PureBinaryConstraint> ck;
    auto route = [&](PureBinaryConstraint pbc) {
      if (touches_fixed(pbc)) {
        std::vector<PbcTerm> terms;
        for (const auto& t : pbc.terms) {
          if (fixed_in_pass(t.literal.col)) pbc.rhs -= t.coef * literal_value(model, t.literal);
          else terms.push_back(t);
        }
        pbc.terms = std::move(terms);
      }
      switch (classify(pbc)) {
        case PbcClass::kSetPacking:
          isp.push_back(std::move(pbc));
          break;
        case PbcClass::kConflictingKnapsack:
          ck.push_back(std::move(pbc));
          break;
        default:
          break;
      }
    };
    for (auto& p : res.isp) route(std::move(p));
    for (auto& p : res.ck) route(std::move(p));
    res.isp = std::move(isp);
    res.ck = std::move(ck);
  }

  model.erase_rows(remove);
  for (std::size_t j = 0; j < model.num_cols(); ++j)
    if (binary_at_input[j] && model.lower[j] == model.upper[j])
      res.fixings.push_back({static_cast<std::int32_t>(j), model.lower[j]});
  res.model = std::move(model);
  res.coefficient_work = work;
  return res;
}

}  // namespace cgp
