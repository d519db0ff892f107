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

// Sparse-row mixed-integer model
//
//   min  c^T x + offset
//   s.t. A x (<=, >=, =) b
//        l <= x <= u,  x_j integer for j in the integer set
//
// Binary columns are not stored separately: column j is binary exactly when
// it is integer with bounds [0, 1].

#ifndef CGP_MODEL_HPP_
#define CGP_MODEL_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace cgp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense : char {
  kLessEqual = 'L',
  kGreaterEqual = 'G',
  kEqual = 'E',
};

struct RowEntry {
  std::int32_t col = 0;
  double coef = 0.0;
};

/// A binary column or its complement (1 - x).
struct Literal {
  std::int32_t col = 0;
  bool complemented = false;

  auto operator<=>(const Literal&) const = default;
};

struct MipModel {
  std::string name;
  std::string objective_name = "obj";
  bool maximize = false;
  double objective_offset = 0.0;

  std::vector<std::string> row_names;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
  std::vector<std::vector<RowEntry>> rows;

  std::vector<std::string> col_names;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<char> integer;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const { return col_names.size(); }
  std::size_t nnz() const;

  bool is_integer(std::int32_t col) const { return integer[col] != 0; }
  bool is_binary(std::int32_t col) const {
    return integer[col] != 0 && lower[col] == 0.0 && upper[col] == 1.0;
  }
  std::vector<std::int32_t> integer_columns() const;
  std::vector<std::int32_t> binary_columns() const;

  std::int32_t add_column(std::string col_name, double obj, double lo,
                          double up, bool is_int);
  /// Zero coefficients are dropped.
  std::int32_t add_row(std::string row_name, RowSense sense, double b,
                       std::vector<RowEntry> entries);
  /// Removes every row whose flag is set, preserving the order of the rest.
  void erase_rows(std::span<const char> drop);
};

/// Exact structural equality; doubles are compared bit for bit.
bool identical(const MipModel& a, const MipModel& b);

}  // namespace cgp

#endif  // CGP_MODEL_HPP_
