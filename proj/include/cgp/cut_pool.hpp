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

// Cut pool produced by triage and its ".cuts" text format.
//
// One line per user cut:
//
//   <tag> <signed-index>+\n
//
// where <tag> is one of the eight origin names below and each signed index is
// +j for x_j and -j for the complement (1 - x_j), with j the 1-based column
// position in the model. Lines are ordered by tag (enum order), then by the
// literal list compared lexicographically as integers.

#ifndef CGP_CUT_POOL_HPP_
#define CGP_CUT_POOL_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgp/model.hpp"

namespace cgp {

enum class OriginTag : std::uint8_t {
  kOspLong,
  kOspOther,
  kIspLong,
  kIspOther,
  kOrgLong,
  kOrgOther,
  kOtherLong,
  kOtherOther,
};

inline constexpr std::size_t kNumOriginTags = 8;

inline constexpr std::array<OriginTag, kNumOriginTags> kAllOriginTags = {
    OriginTag::kOspLong,  OriginTag::kOspOther,  OriginTag::kIspLong,
    OriginTag::kIspOther, OriginTag::kOrgLong,   OriginTag::kOrgOther,
    OriginTag::kOtherLong, OriginTag::kOtherOther};

std::string_view to_string(OriginTag tag);
std::optional<OriginTag> origin_tag_from_string(std::string_view name);

enum class Disposition : std::uint8_t { kModelConstraint, kUserCut };

struct PoolCut {
  std::vector<Literal> literals;  // sorted by (col, complemented)
  OriginTag origin = OriginTag::kOspLong;
  Disposition disposition = Disposition::kUserCut;
};

struct CutPool {
  std::vector<PoolCut> cuts;

  std::size_t count(Disposition d) const;
};

/// Signed 1-based index: +j for x_j, -j for its complement.
std::int64_t signed_index(const Literal& lit);

/// Lines for every user cut, in the deterministic order described above.
std::string export_cut_pool(const CutPool& pool);

/// Reads a ".cuts" stream; every record comes back as a user cut.
/// Throws std::runtime_error naming the line on malformed input.
CutPool parse_cut_pool(std::string_view text);

}  // namespace cgp

#endif  // CGP_CUT_POOL_HPP_
