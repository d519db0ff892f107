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

#include "cgp/cut_pool.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cgp {

namespace {

constexpr std::array<std::string_view, kNumOriginTags> kTagNames = {
    "osp_long", "osp_other", "isp_long",   "isp_other",
    "org_long", "org_other", "other_long", "other_other"};

std::vector<std::int64_t> signed_list(const PoolCut& cut) {
  std::vector<std::int64_t> out;
  out.reserve(cut.literals.size());
  for (const auto& lit : cut.literals) out.push_back(signed_index(lit));
  return out;
}

}  // namespace

std::string_view to_string(OriginTag tag) {
  return kTagNames[static_cast<std::size_t>(tag)];
}

std::optional<OriginTag> origin_tag_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i)
    if (kTagNames[i] == name) return static_cast<OriginTag>(i);
  return std::nullopt;
}

std::size_t CutPool::count(Disposition d) const {
  return static_cast<std::size_t>(std::count_if(
      cuts.begin(), cuts.end(),
      [d](const PoolCut& c) { return c.disposition == d; }));
}

std::int64_t signed_index(const Literal& lit) {
  const std::int64_t j = static_cast<std::int64_t>(lit.col) + 1;
  return lit.complemented ? -j : j;
}

std::string export_cut_pool(const CutPool& pool) {
  struct Line {
    OriginTag tag;
    std::vector<std::int64_t> lits;
  };
  std::vector<Line> lines;
  for (const auto& cut : pool.cuts)
    if (cut.disposition == Disposition::kUserCut)
      lines.push_back({cut.origin, signed_list(cut)});
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    return a.lits < b.lits;
  });

  std::string out;
  for (const auto& line : lines) {
    out += to_string(line.tag);
    for (std::int64_t v : line.lits) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

CutPool parse_cut_pool(std::string_view text) {
  CutPool pool;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string tag_name;
    if (!(fields >> tag_name)) continue;
    const auto tag = origin_tag_from_string(tag_name);
    if (!tag)
      throw std::runtime_error("cut pool line " + std::to_string(lineno) +
                               ": unknown tag '" + tag_name + "'");
    PoolCut cut;
    cut.origin = *tag;
    std::string tok;
    while (fields >> tok) {
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0)
        throw std::runtime_error("cut pool line " + std::to_string(lineno) +
                                 ": bad literal '" + tok + "'");
      cut.literals.push_back(
          {static_cast<std::int32_t>((v > 0 ? v : -v) - 1), v < 0});
    }
    if (cut.literals.empty())
      throw std::runtime_error("cut pool line " + std::to_string(lineno) +
                               ": no literals");
    std::sort(cut.literals.begin(), cut.literals.end());
    pool.cuts.push_back(std::move(cut));
  }
  return pool;
}

}  // namespace cgp
