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

#include <cmath>
#include <string>
#include <vector>

#include "cgp/cut_pool.hpp"
#include "cgp/mps_io.hpp"
#include "doctest.h"
#include "oracles.hpp"

#ifndef CGP_TEST_DATA_DIR
#error "CGP_TEST_DATA_DIR must point at tests/data"
#endif

using cgp::Disposition;
using cgp::Literal;
using cgp::OriginTag;
using cgp::RowSense;

namespace {

const char* kPacking = R"(NAME PACK
ROWS
 N obj
 L c1
COLUMNS
 x1 obj 1 c1 1
 x2 obj 1 c1 1
RHS
 rhs c1 1
BOUNDS
 BV bnd x1
 BV bnd x2
ENDATA
)";

std::string with_sense_g(std::string text) {
  text.replace(text.find(" L c1"), 5, " G c1");
  return text;
}

cgp::CutPool pool_of(std::vector<cgp::PoolCut> cuts) { return cgp::CutPool{std::move(cuts)}; }

}  // namespace

TEST_SUITE("model_io") {

TEST_CASE("smallest set packing file") {
  const cgp::MipModel m = cgp::parse_mps(kPacking);
  CHECK(m.num_rows() == 1);
  CHECK(m.num_cols() == 2);
  CHECK(m.binary_columns() == std::vector<std::int32_t>{0, 1});
  CHECK(m.nnz() == 2);
  CHECK(m.senses[0] == RowSense::kLessEqual);
  CHECK_FALSE(m.maximize);
}

TEST_CASE("sense G passes through unchanged") {
  const cgp::MipModel a = cgp::parse_mps(kPacking);
  cgp::MipModel b = cgp::parse_mps(with_sense_g(kPacking));
  CHECK(b.senses[0] == RowSense::kGreaterEqual);
  b.senses[0] = RowSense::kLessEqual;
  CHECK(cgp::identical(a, b));
}

TEST_CASE("hand-written fixture matches the independent reader") {
  // Tuple frozen from HiGHS reading tests/data/small.mps.
  const cgp::MipModel m = cgp::read_mps_file(std::string(CGP_TEST_DATA_DIR) + "/small.mps");
  CHECK(m.num_rows() == 3);
  CHECK(m.num_cols() == 4);
  CHECK(m.nnz() == 7);
  CHECK(m.rhs == std::vector<double>{40.0, 1.0, 7.0});
  CHECK(m.senses == std::vector<RowSense>{RowSense::kLessEqual, RowSense::kGreaterEqual,
                                          RowSense::kEqual});
  CHECK(m.lower == std::vector<double>{0.0, 0.0, -cgp::kInf, 0.0});
  CHECK(m.upper == std::vector<double>{1.0, 4.0, 8.0, 9.5});
  CHECK(m.objective == std::vector<double>{1.0, 2.0, -1.0, 1.5});
  CHECK(m.integer_columns() == std::vector<std::int32_t>{0, 1});
  CHECK(m.binary_columns() == std::vector<std::int32_t>{0});
}

TEST_CASE("parse errors carry line numbers and names") {
  const std::string bad_number = "NAME X\nROWS\n N obj\n L c1\nCOLUMNS\n x1 c1 abc\nENDATA\n";
  try {
    cgp::parse_mps(bad_number);
    FAIL("expected an error");
  } catch (const cgp::MpsError& e) {
    CHECK(e.line() == 6);
  }
  const std::string dup_row = "NAME X\nROWS\n N obj\n L c1\n G c1\nENDATA\n";
  CHECK_THROWS_WITH_AS(cgp::parse_mps(dup_row), doctest::Contains("duplicate row"),
                       cgp::MpsError);
  const std::string dup_col =
      "NAME X\nROWS\n N obj\n L c1\nCOLUMNS\n x1 c1 1\n x2 c1 1\n x1 obj 1\nENDATA\n";
  CHECK_THROWS_WITH_AS(cgp::parse_mps(dup_col), doctest::Contains("duplicate column"),
                       cgp::MpsError);
  const std::string sos = "NAME X\nROWS\n N obj\nSOS\n S1 SOS s1 1\nENDATA\n";
  CHECK_THROWS_WITH_AS(cgp::parse_mps(sos), doctest::Contains("'SOS'"), cgp::MpsError);
  const std::string unknown_row = "NAME X\nROWS\n N obj\nCOLUMNS\n x1 c9 1\nENDATA\n";
  CHECK_THROWS_WITH_AS(cgp::parse_mps(unknown_row), doctest::Contains("unknown row"),
                       cgp::MpsError);
  const std::string crossed =
      "NAME X\nROWS\n N obj\nCOLUMNS\n x1 obj 1\nBOUNDS\n LO b x1 3\n UP b x1 2\nENDATA\n";
  CHECK_THROWS_AS(cgp::parse_mps(crossed), cgp::MpsError);
}

TEST_CASE("bound types and integrality") {
  const std::string text = R"(NAME B
ROWS
 N obj
 L r
COLUMNS
    M1 'MARKER' 'INTORG'
 a r 1
 b r 1
    M2 'MARKER' 'INTEND'
 c r 1
 d r 1
 e r 1
 f r 1
RHS
 rhs r 5
BOUNDS
 UP bnd b 3
 LI bnd c -2
 UI bnd c 2
 FR bnd d
 FX bnd e 2.5
 MI bnd f
 PL bnd f
ENDATA
)";
  const cgp::MipModel m = cgp::parse_mps(text);
  CHECK(m.is_binary(0));
  CHECK(m.is_integer(1));
  CHECK(m.upper[1] == 3.0);
  CHECK(m.is_integer(2));
  CHECK(m.lower[2] == -2.0);
  CHECK(m.upper[2] == 2.0);
  CHECK(m.lower[3] == -cgp::kInf);
  CHECK(m.upper[3] == cgp::kInf);
  CHECK(m.lower[4] == 2.5);
  CHECK(m.upper[4] == 2.5);
  CHECK(m.lower[5] == -cgp::kInf);
  CHECK(m.upper[5] == cgp::kInf);
}

TEST_CASE("ranges expand into a paired row") {
  const std::string text =
      "NAME R\nROWS\n N obj\n L r\n E q\nCOLUMNS\n x r 1 q 1\nRHS\n rhs r 10 q 3\n"
      "RANGES\n rng r 4 q -2\nENDATA\n";
  const cgp::MipModel m = cgp::parse_mps(text);
  REQUIRE(m.num_rows() == 4);
  CHECK(m.senses[0] == RowSense::kLessEqual);
  CHECK(m.rhs[0] == 10.0);
  CHECK(m.row_names[2] == "r_rng");
  CHECK(m.senses[2] == RowSense::kGreaterEqual);
  CHECK(m.rhs[2] == 6.0);
  CHECK(m.senses[1] == RowSense::kGreaterEqual);
  CHECK(m.rhs[1] == 1.0);
  CHECK(m.row_names[3] == "q_rng");
  CHECK(m.senses[3] == RowSense::kLessEqual);
  CHECK(m.rhs[3] == 3.0);
}

TEST_CASE("write then parse reproduces the model bit for bit") {
  const cgp::MipModel small =
      cgp::read_mps_file(std::string(CGP_TEST_DATA_DIR) + "/small.mps");
  const cgp::MipModel again = cgp::parse_mps(cgp::write_mps(small));
  CHECK(cgp::identical(small, again));
  CHECK(cgp::write_mps(again) == cgp::write_mps(small));

  cgp::SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    cgp::MipModel m = oracle::random_mip(rng);
    m.objective_offset = trial % 3 == 0 ? 0.1 * trial : 0.0;
    m.maximize = trial % 5 == 0;
    if (trial % 4 == 0) m.add_column("cont", 1.0 / 3.0, -cgp::kInf, 7.25, false);
    if (trial % 7 == 0) m.add_column("neg", 0.0, -3.0, -1.0, false);
    if (trial % 6 == 0) m.add_column("zero_int", 0.0, -2.0, 5.0, true);
    const cgp::MipModel r = cgp::parse_mps(cgp::write_mps(m));
    CHECK(cgp::identical(m, r));
  }
}

TEST_CASE("augmented rows follow the literal set packing form") {
  const cgp::MipModel base = cgp::parse_mps(kPacking);
  const auto added = [&](std::vector<Literal> lits) {
    const cgp::MipModel out = cgp::parse_mps(cgp::write_augmented_mps(
        base, pool_of({{lits, OriginTag::kOrgLong, Disposition::kModelConstraint}})));
    REQUIRE(out.num_rows() == 2);
    return out;
  };
  {
    const cgp::MipModel out = added({{0, false}, {1, false}});
    CHECK(out.senses[1] == RowSense::kLessEqual);
    CHECK(out.rhs[1] == 1.0);
    REQUIRE(out.rows[1].size() == 2);
    CHECK(out.rows[1][0].coef == 1.0);
    CHECK(out.rows[1][1].coef == 1.0);
  }
  {
    const cgp::MipModel out = added({{0, false}, {1, true}});
    CHECK(out.rhs[1] == 0.0);
    REQUIRE(out.rows[1].size() == 2);
    CHECK(out.rows[1][0].col == 0);
    CHECK(out.rows[1][0].coef == 1.0);
    CHECK(out.rows[1][1].col == 1);
    CHECK(out.rows[1][1].coef == -1.0);
  }
}

TEST_CASE("empty pool round-trips and row counts match dispositions") {
  const cgp::MipModel base = cgp::parse_mps(kPacking);
  CHECK(cgp::identical(cgp::parse_mps(cgp::write_augmented_mps(base, {})), base));

  const cgp::CutPool pool = pool_of({
      {{{0, false}, {1, false}}, OriginTag::kOrgLong, Disposition::kModelConstraint},
      {{{0, true}, {1, true}}, OriginTag::kIspLong, Disposition::kModelConstraint},
      {{{0, false}, {1, true}}, OriginTag::kOrgOther, Disposition::kUserCut},
  });
  const cgp::MipModel out = cgp::parse_mps(cgp::write_augmented_mps(base, pool));
  CHECK(out.num_rows() == base.num_rows() + pool.count(Disposition::kModelConstraint));
}

TEST_CASE("augmenting with a non-binary column fails") {
  cgp::MipModel base = cgp::parse_mps(kPacking);
  base.add_column("y", 0.0, 0.0, 5.0, false);
  const cgp::CutPool pool =
      pool_of({{{{0, false}, {2, false}}, OriginTag::kOrgLong, Disposition::kModelConstraint}});
  CHECK_THROWS_AS(cgp::write_augmented_mps(base, pool), std::invalid_argument);
}

TEST_CASE("cut pool export format and ordering") {
  CHECK(cgp::export_cut_pool(pool_of({{{{0, false}, {2, true}}, OriginTag::kOrgOther,
                                        Disposition::kUserCut}})) == "org_other 1 -3\n");

  const std::vector<Literal> lits = {{0, false}, {1, false}};
  const std::string two = cgp::export_cut_pool(pool_of({
      {lits, OriginTag::kOtherOther, Disposition::kUserCut},
      {lits, OriginTag::kIspOther, Disposition::kUserCut},
  }));
  CHECK(two == "isp_other 1 2\nother_other 1 2\n");

  std::vector<cgp::PoolCut> cuts = {
      {{{0, false}, {4, false}}, OriginTag::kOrgLong, Disposition::kUserCut},
      {{{0, false}, {1, true}}, OriginTag::kOrgLong, Disposition::kUserCut},
      {{{2, true}, {3, false}}, OriginTag::kOspOther, Disposition::kUserCut},
      {{{2, false}, {3, false}}, OriginTag::kOspOther, Disposition::kModelConstraint},
  };
  const std::string a = cgp::export_cut_pool(pool_of(cuts));
  std::reverse(cuts.begin(), cuts.end());
  CHECK(cgp::export_cut_pool(pool_of(cuts)) == a);
  CHECK(a == "osp_other -3 4\norg_long 1 -2\norg_long 1 5\n");

  const cgp::CutPool back = cgp::parse_cut_pool(a);
  CHECK(back.cuts.size() == 3);
  CHECK(cgp::export_cut_pool(back) == a);
  CHECK_THROWS_AS(cgp::parse_cut_pool("bogus 1 2\n"), std::runtime_error);
  CHECK_THROWS_AS(cgp::parse_cut_pool("org_long 0\n"), std::runtime_error);
}

}  // TEST_SUITE
