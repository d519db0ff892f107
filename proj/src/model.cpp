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

#include "cgp/model.hpp"

#include <bit>
#include <cstring>

namespace cgp {

std::size_t MipModel::nnz() const {
  std::size_t total = 0;
  for (const auto& row : rows) total += row.size();
  return total;
}

std::vector<std::int32_t> MipModel::integer_columns() const {
  std::vector<std::int32_t> cols;
  for (std::int32_t j = 0; j < static_cast<std::int32_t>(num_cols()); ++j)
    if (is_integer(j)) cols.push_back(j);
  return cols;
}

std::vector<std::int32_t> MipModel::binary_columns() const {
  std::vector<std::int32_t> cols;
  for (std::int32_t j = 0; j < static_cast<std::int32_t>(num_cols()); ++j)
    if (is_binary(j)) cols.push_back(j);
  return cols;
}

std::int32_t MipModel::add_column(std::string col_name, double obj, double lo,
                                  double up, bool is_int) {
  col_names.push_back(std::move(col_name));
  objective.push_back(obj);
  lower.push_back(lo);
  upper.push_back(up);
  integer.push_back(is_int ? 1 : 0);
  return static_cast<std::int32_t>(col_names.size() - 1);
}

std::int32_t MipModel::add_row(std::string row_name, RowSense sense, double b,
                               std::vector<RowEntry> entries) {
  std::erase_if(entries, [](const RowEntry& e) { return e.coef == 0.0; });
  row_names.push_back(std::move(row_name));
  senses.push_back(sense);
  rhs.push_back(b);
  rows.push_back(std::move(entries));
  return static_cast<std::int32_t>(rows.size() - 1);
}

void MipModel::erase_rows(std::span<const char> drop) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i < drop.size() && drop[i]) continue;
    if (out != i) {
      row_names[out] = std::move(row_names[i]);
      senses[out] = senses[i];
      rhs[out] = rhs[i];
      rows[out] = std::move(rows[i]);
    }
    ++out;
  }
  row_names.resize(out);
  senses.resize(out);
  rhs.resize(out);
  rows.resize(out);
}

namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_bits(a[i], b[i])) return false;
  return true;
}

}  // namespace

bool identical(const MipModel& a, const MipModel& b) {
  if (a.name != b.name || a.objective_name != b.objective_name ||
      a.maximize != b.maximize ||
      !same_bits(a.objective_offset, b.objective_offset))
    return false;
  if (a.row_names != b.row_names || a.senses != b.senses ||
      !same_bits(a.rhs, b.rhs) || a.rows.size() != b.rows.size())
    return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& ra = a.rows[i];
    const auto& rb = b.rows[i];
    if (ra.size() != rb.size()) return false;
    for (std::size_t t = 0; t < ra.size(); ++t)
      if (ra[t].col != rb[t].col || !same_bits(ra[t].coef, rb[t].coef))
        return false;
  }
  return a.col_names == b.col_names && same_bits(a.objective, b.objective) &&
         same_bits(a.lower, b.lower) && same_bits(a.upper, b.upper) &&
         a.integer == b.integer;
}

}  // namespace cgp
