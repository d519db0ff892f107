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

// MPS reading and writing.
//
// The reader accepts fixed and free MPS as long as names carry no embedded
// blanks. Supported sections: NAME, OBJSENSE, ROWS, COLUMNS, RHS, RANGES,
// BOUNDS, ENDATA. Integrality comes from MARKER INTORG/INTEND blocks or from
// BV/LI/UI bounds. Columns declared inside a marker block default to [0, 1];
// any bound record other than "LO 0" or "UP 1" first resets the upper default
// to +inf. Ranged rows are expanded into a pair of rows at parse time.
// Magnitudes of 1e30 or more read as infinite bounds.

#ifndef CGP_MPS_IO_HPP_
#define CGP_MPS_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cgp/cut_pool.hpp"
#include "cgp/model.hpp"

namespace cgp {

class MpsError : public std::runtime_error {
 public:
  MpsError(std::size_t line, const std::string& message)
      : std::runtime_error("MPS line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

MipModel parse_mps(std::string_view text);
MipModel read_mps_file(const std::filesystem::path& path);

/// Canonical free-format MPS. Numbers use the shortest representation that
/// reads back bit-identically, so parse_mps(write_mps(m)) reproduces m.
std::string write_mps(const MipModel& model);

/// The model plus one "<= 1 - q" row per model_constraint cut with q
/// complemented literals. Throws std::invalid_argument if such a cut names a
/// column that is not binary in `model`.
std::string write_augmented_mps(const MipModel& model, const CutPool& pool);

/// Appends the clique rows described above to `model` in canonical cut order.
void append_clique_rows(MipModel& model, const CutPool& pool);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace cgp

#endif  // CGP_MPS_IO_HPP_
