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

#include "cgp/mps_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cgp {

namespace {

constexpr double kMpsInfinity = 1e30;

enum class Section {
  kNone,
  kName,
  kObjSense,
  kRows,
  kColumns,
  kRhs,
  kRanges,
  kBounds,
  kEnd,
};

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string upper_case(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class Parser {
 public:
  MipModel run(std::string_view text);

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw MpsError(lineno_, msg);
  }

  double number(std::string_view tok) const {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
      fail("invalid number '" + std::string(tok) + "'");
    return v;
  }

  double bound_value(std::string_view tok) const {
    const double v = number(tok);
    if (v >= kMpsInfinity) return kInf;
    if (v <= -kMpsInfinity) return -kInf;
    return v;
  }

  void section_header(const std::vector<std::string_view>& toks);
  void rows_line(const std::vector<std::string_view>& toks);
  void columns_line(const std::vector<std::string_view>& toks);
  void rhs_line(const std::vector<std::string_view>& toks, bool ranges);
  void bounds_line(const std::vector<std::string_view>& toks);
  void finish();

  std::int32_t column_index(std::string_view name) const {
    auto it = col_index_.find(std::string(name));
    if (it == col_index_.end()) fail("unknown column '" + std::string(name) + "'");
    return it->second;
  }

  MipModel model_;
  Section section_ = Section::kNone;
  std::size_t lineno_ = 0;
  bool have_objective_ = false;
  bool in_marker_ = false;

  // Row name -> row index, or -1 for the objective and -2 for extra free rows.
  std::unordered_map<std::string, std::int32_t> row_index_;
  std::unordered_map<std::string, std::int32_t> col_index_;
  std::int32_t current_col_ = -1;
  std::unordered_set<std::int32_t> rows_in_current_col_;
  std::vector<char> int_default_binary_;
  std::vector<char> lower_set_;
  std::map<std::int32_t, double> ranges_;
};

void Parser::section_header(const std::vector<std::string_view>& toks) {
  const std::string key = upper_case(toks[0]);
  if (key == "NAME") {
    section_ = Section::kName;
    if (toks.size() > 1) model_.name = std::string(toks[1]);
  } else if (key == "OBJSENSE" || key == "OBJSENCE") {
    section_ = Section::kObjSense;
    if (toks.size() > 1) {
      const std::string s = upper_case(toks[1]);
      if (s == "MAX" || s == "MAXIMIZE") model_.maximize = true;
      else if (s == "MIN" || s == "MINIMIZE") model_.maximize = false;
      else fail("invalid objective sense '" + std::string(toks[1]) + "'");
    }
  } else if (key == "ROWS") {
    section_ = Section::kRows;
  } else if (key == "COLUMNS") {
    section_ = Section::kColumns;
  } else if (key == "RHS") {
    section_ = Section::kRhs;
  } else if (key == "RANGES") {
    section_ = Section::kRanges;
  } else if (key == "BOUNDS") {
    section_ = Section::kBounds;
  } else if (key == "ENDATA") {
    section_ = Section::kEnd;
  } else {
    fail("unsupported section '" + std::string(toks[0]) + "'");
  }
}

void Parser::rows_line(const std::vector<std::string_view>& toks) {
  if (toks.size() != 2) fail("ROWS entry needs a type and a name");
  const std::string type = upper_case(toks[0]);
  std::string name(toks[1]);
  if (row_index_.contains(name)) fail("duplicate row name '" + name + "'");
  if (type == "N") {
    if (!have_objective_) {
      model_.objective_name = name;
      have_objective_ = true;
      row_index_.emplace(std::move(name), -1);
    } else {
      row_index_.emplace(std::move(name), -2);
    }
    return;
  }
  RowSense sense;
  if (type == "L") sense = RowSense::kLessEqual;
  else if (type == "G") sense = RowSense::kGreaterEqual;
  else if (type == "E") sense = RowSense::kEqual;
  else fail("invalid row type '" + std::string(toks[0]) + "'");
  const auto idx = model_.add_row(name, sense, 0.0, {});
  row_index_.emplace(std::move(name), idx);
}

void Parser::columns_line(const std::vector<std::string_view>& toks) {
  if (toks.size() >= 3 && upper_case(toks[1]) == "'MARKER'") {
    const std::string kind = upper_case(toks[2]);
    if (kind == "'INTORG'") in_marker_ = true;
    else if (kind == "'INTEND'") in_marker_ = false;
    else fail("invalid marker '" + std::string(toks[2]) + "'");
    return;
  }
  if (toks.size() != 3 && toks.size() != 5)
    fail("COLUMNS entry needs a column and one or two (row, value) pairs");
  const std::string col_name(toks[0]);
  auto it = col_index_.find(col_name);
  if (it == col_index_.end()) {
    current_col_ = model_.add_column(col_name, 0.0, 0.0,
                                     in_marker_ ? 1.0 : kInf, in_marker_);
    col_index_.emplace(col_name, current_col_);
    int_default_binary_.push_back(in_marker_ ? 1 : 0);
    lower_set_.push_back(0);
    rows_in_current_col_.clear();
  } else if (it->second != current_col_) {
    fail("duplicate column name '" + col_name + "'");
  }
  for (std::size_t t = 1; t + 1 < toks.size(); t += 2) {
    const std::string row_name(toks[t]);
    auto r = row_index_.find(row_name);
    if (r == row_index_.end()) fail("unknown row '" + row_name + "'");
    const double v = number(toks[t + 1]);
    if (!rows_in_current_col_.insert(r->second).second)
      fail("duplicate entry for column '" + col_name + "' in row '" + row_name + "'");
    if (r->second == -1) {
      model_.objective[current_col_] = v;
    } else if (r->second >= 0 && v != 0.0) {
      model_.rows[r->second].push_back({current_col_, v});
    }
  }
}

void Parser::rhs_line(const std::vector<std::string_view>& toks, bool ranges) {
  // Optional leading set name: an odd token count means it is present.
  const std::size_t first = toks.size() % 2 == 1 ? 1 : 0;
  if (toks.size() < first + 2) fail(ranges ? "malformed RANGES entry" : "malformed RHS entry");
  for (std::size_t t = first; t + 1 < toks.size(); t += 2) {
    const std::string row_name(toks[t]);
    auto r = row_index_.find(row_name);
    if (r == row_index_.end()) fail("unknown row '" + row_name + "'");
    const double v = number(toks[t + 1]);
    if (ranges) {
      if (r->second < 0) fail("RANGES entry on objective row");
      ranges_[r->second] = v;
    } else if (r->second == -1) {
      model_.objective_offset = -v;
    } else if (r->second >= 0) {
      model_.rhs[r->second] = v;
    }
  }
}

void Parser::bounds_line(const std::vector<std::string_view>& toks) {
  if (toks.empty()) return;
  const std::string type = upper_case(toks[0]);
  const bool needs_value = type == "UP" || type == "LO" || type == "FX" ||
                           type == "LI" || type == "UI";
  const bool no_value = type == "MI" || type == "PL" || type == "FR" || type == "BV";
  if (type == "SC") fail("unsupported bound type 'SC' (semicontinuous)");
  if (!needs_value && !no_value) fail("invalid bound type '" + std::string(toks[0]) + "'");

  std::string_view col_name;
  std::string_view value_tok;
  if (needs_value) {
    if (toks.size() == 4) {
      col_name = toks[2];
      value_tok = toks[3];
    } else if (toks.size() == 3) {
      col_name = toks[1];
      value_tok = toks[2];
    } else {
      fail("bound '" + type + "' needs a column and a value");
    }
  } else {
    if (toks.size() == 3 || toks.size() == 4) col_name = toks[2];
    else if (toks.size() == 2) col_name = toks[1];
    else fail("malformed bound entry");
  }
  const std::int32_t j = column_index(col_name);
  const double v = needs_value ? bound_value(value_tok) : 0.0;

  if (int_default_binary_[j]) {
    const bool keeps_default = type == "BV" || (type == "LO" && v == 0.0) ||
                               (type == "UP" && v == 1.0);
    if (!keeps_default) model_.upper[j] = kInf;
    int_default_binary_[j] = 0;
  }

  if (type == "UP" || type == "UI") {
    if (v < 0.0 && model_.lower[j] == 0.0 && !lower_set_[j]) model_.lower[j] = -kInf;
    model_.upper[j] = v;
    if (type == "UI") model_.integer[j] = 1;
  } else if (type == "LO" || type == "LI") {
    model_.lower[j] = v;
    lower_set_[j] = 1;
    if (type == "LI") model_.integer[j] = 1;
  } else if (type == "FX") {
    model_.lower[j] = v;
    model_.upper[j] = v;
    lower_set_[j] = 1;
  } else if (type == "FR") {
    model_.lower[j] = -kInf;
    model_.upper[j] = kInf;
    lower_set_[j] = 1;
  } else if (type == "MI") {
    model_.lower[j] = -kInf;
    lower_set_[j] = 1;
  } else if (type == "PL") {
    model_.upper[j] = kInf;
  } else if (type == "BV") {
    model_.integer[j] = 1;
    model_.lower[j] = 0.0;
    model_.upper[j] = 1.0;
    lower_set_[j] = 1;
  }
}

void Parser::finish() {
  // Expand ranges: each ranged row keeps one side, a "<name>_rng" row carries
  // the other.
  for (const auto& [i, range] : ranges_) {
    const double b = model_.rhs[i];
    const double r = std::fabs(range);
    double lo = 0.0;
    double hi = 0.0;
    switch (model_.senses[i]) {
      case RowSense::kLessEqual:
        lo = b - r;
        hi = b;
        break;
      case RowSense::kGreaterEqual:
        lo = b;
        hi = b + r;
        break;
      case RowSense::kEqual:
        lo = range < 0 ? b + range : b;
        hi = range < 0 ? b : b + range;
        break;
    }
    std::string name = model_.row_names[i] + "_rng";
    if (row_index_.contains(name)) fail("range row name '" + name + "' collides");
    if (model_.senses[i] == RowSense::kLessEqual) {
      model_.add_row(name, RowSense::kGreaterEqual, lo, model_.rows[i]);
    } else {
      model_.senses[i] = RowSense::kGreaterEqual;
      model_.rhs[i] = lo;
      model_.add_row(name, RowSense::kLessEqual, hi, model_.rows[i]);
    }
    row_index_.emplace(std::move(name), static_cast<std::int32_t>(model_.num_rows() - 1));
  }
  for (std::size_t j = 0; j < model_.num_cols(); ++j)
    if (model_.lower[j] > model_.upper[j])
      fail("column '" + model_.col_names[j] + "' has lower bound above upper bound");
}

MipModel Parser::run(std::string_view text) {
  std::size_t pos = 0;
  while (pos <= text.size() && section_ != Section::kEnd) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line[0] == '*') continue;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;

    const bool header = !std::isspace(static_cast<unsigned char>(line[0]));
    if (header) {
      section_header(toks);
      continue;
    }
    switch (section_) {
      case Section::kNone:
        fail("data line before any section");
      case Section::kName:
        fail("unexpected data after NAME");
      case Section::kObjSense: {
        const std::string s = upper_case(toks[0]);
        if (s == "MAX" || s == "MAXIMIZE") model_.maximize = true;
        else if (s == "MIN" || s == "MINIMIZE") model_.maximize = false;
        else fail("invalid objective sense '" + std::string(toks[0]) + "'");
        break;
      }
      case Section::kRows:
        rows_line(toks);
        break;
      case Section::kColumns:
        columns_line(toks);
        break;
      case Section::kRhs:
        rhs_line(toks, false);
        break;
      case Section::kRanges:
        rhs_line(toks, true);
        break;
      case Section::kBounds:
        bounds_line(toks);
        break;
      case Section::kEnd:
        break;
    }
  }
  finish();
  return std::move(model_);
}

std::string fmt_number(double v) {
  if (v == kInf) return "1e30";
  if (v == -kInf) return "-1e30";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

bool is_positive_zero(double v) { return std::bit_cast<std::uint64_t>(v) == 0; }

std::string name_or(const std::string& name, char prefix, std::size_t idx) {
  if (!name.empty()) return name;
  return std::string(1, prefix) + std::to_string(idx);
}

}  // namespace

MipModel parse_mps(std::string_view text) { return Parser{}.run(text); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

MipModel read_mps_file(const std::filesystem::path& path) {
  return parse_mps(read_text_file(path));
}

std::string write_mps(const MipModel& model) {
  const std::size_t m = model.num_rows();
  const std::size_t n = model.num_cols();
  std::vector<std::string> row_names(m);
  std::vector<std::string> col_names(n);
  for (std::size_t i = 0; i < m; ++i) row_names[i] = name_or(model.row_names[i], 'R', i);
  for (std::size_t j = 0; j < n; ++j) col_names[j] = name_or(model.col_names[j], 'C', j);
  const std::string obj = model.objective_name.empty() ? "obj" : model.objective_name;

  // Column-major view of the row-wise matrix.
  std::vector<std::vector<std::pair<std::size_t, double>>> cols(n);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& e : model.rows[i]) cols[e.col].emplace_back(i, e.coef);

  std::string out;
  out += "NAME " + model.name + "\n";
  if (model.maximize) out += "OBJSENSE\n    MAX\n";
  out += "ROWS\n N  " + obj + "\n";
  for (std::size_t i = 0; i < m; ++i) {
    out += ' ';
    out += static_cast<char>(model.senses[i]);
    out += "  " + row_names[i] + "\n";
  }

  out += "COLUMNS\n";
  bool in_marker = false;
  std::size_t marker_count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const bool is_int = model.integer[j] != 0;
    if (is_int != in_marker) {
      out += "    MARKER" + std::to_string(marker_count++) + " 'MARKER' " +
             (is_int ? "'INTORG'\n" : "'INTEND'\n");
      in_marker = is_int;
    }
    if (!is_positive_zero(model.objective[j]) || cols[j].empty())
      out += "    " + col_names[j] + " " + obj + " " + fmt_number(model.objective[j]) + "\n";
    for (const auto& [i, v] : cols[j])
      out += "    " + col_names[j] + " " + row_names[i] + " " + fmt_number(v) + "\n";
  }
  if (in_marker)
    out += "    MARKER" + std::to_string(marker_count++) + " 'MARKER' 'INTEND'\n";

  out += "RHS\n";
  if (!is_positive_zero(model.objective_offset))
    out += "    RHS " + obj + " " + fmt_number(-model.objective_offset) + "\n";
  for (std::size_t i = 0; i < m; ++i)
    if (!is_positive_zero(model.rhs[i]))
      out += "    RHS " + row_names[i] + " " + fmt_number(model.rhs[i]) + "\n";

  out += "BOUNDS\n";
  for (std::size_t j = 0; j < n; ++j) {
    const double lo = model.lower[j];
    const double up = model.upper[j];
    const std::string& name = col_names[j];
    if (model.integer[j]) {
      if (is_positive_zero(lo) && up == 1.0) {
        out += " BV BND " + name + "\n";
        continue;
      }
      out += lo == -kInf ? " MI BND " + name + "\n"
                         : " LO BND " + name + " " + fmt_number(lo) + "\n";
      out += up == kInf ? " PL BND " + name + "\n"
                        : " UP BND " + name + " " + fmt_number(up) + "\n";
      continue;
    }
    if (lo == -kInf && up == kInf) {
      out += " FR BND " + name + "\n";
      continue;
    }
    if (lo == -kInf) out += " MI BND " + name + "\n";
    else if (!is_positive_zero(lo) || up < 0.0)
      out += " LO BND " + name + " " + fmt_number(lo) + "\n";
    if (up != kInf) out += " UP BND " + name + " " + fmt_number(up) + "\n";
  }
  out += "ENDATA\n";
  return out;
}

void append_clique_rows(MipModel& model, const CutPool& pool) {
  std::vector<const PoolCut*> cuts;
  for (const auto& c : pool.cuts)
    if (c.disposition == Disposition::kModelConstraint) cuts.push_back(&c);
  std::sort(cuts.begin(), cuts.end(), [](const PoolCut* a, const PoolCut* b) {
    if (a->origin != b->origin) return a->origin < b->origin;
    return std::lexicographical_compare(
        a->literals.begin(), a->literals.end(), b->literals.begin(),
        b->literals.end(), [](const Literal& x, const Literal& y) {
          return signed_index(x) < signed_index(y);
        });
  });

  std::unordered_set<std::string> names(model.row_names.begin(), model.row_names.end());
  std::size_t counter = 0;
  for (const PoolCut* cut : cuts) {
    std::map<std::int32_t, double> coefs;
    double b = 1.0;
    for (const auto& lit : cut->literals) {
      if (lit.col < 0 || static_cast<std::size_t>(lit.col) >= model.num_cols() ||
          !model.is_binary(lit.col))
        throw std::invalid_argument("clique references non-binary column " +
                                    std::to_string(lit.col + 1));
      if (lit.complemented) {
        coefs[lit.col] -= 1.0;
        b -= 1.0;
      } else {
        coefs[lit.col] += 1.0;
      }
    }
    std::vector<RowEntry> entries;
    for (const auto& [col, v] : coefs) entries.push_back({col, v});
    std::string name;
    do {
      name = "clq_" + std::to_string(counter++);
    } while (names.contains(name));
    names.insert(name);
    model.add_row(std::move(name), RowSense::kLessEqual, b, std::move(entries));
  }
}

std::string write_augmented_mps(const MipModel& model, const CutPool& pool) {
  MipModel out = model;
  append_clique_rows(out, pool);
  return write_mps(out);
}

}  // namespace cgp
