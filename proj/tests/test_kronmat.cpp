// Copyright 2026 The gr4sd Authors
//
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gr4sd/error.hpp"
#include "gr4sd/kronmat.hpp"
#include "oracles.hpp"

using namespace gr4sd;

namespace {

BinMatrix from_rows(const std::vector<std::string>& rows) {
  BinMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) a.set(r, c, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == '1');
  return a;
}

}  // namespace

TEST_CASE("G is Pascal's triangle mod 2") {
  CHECK(build_G(1) == from_rows({"10", "11"}));
  CHECK(build_G(2) == from_rows({"1000", "1100", "1010", "1111"}));
  for (int lambda = 1; lambda <= 8; ++lambda) {
    const BinMatrix g = build_G(lambda);
    const int n = 1 << lambda;
    const auto p = oracle::pascal_mod2(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) REQUIRE(g(r, c) == (p[r][c] == 1));
  }
}

TEST_CASE("G squared is the identity") {
  for (int lambda = 1; lambda <= 7; ++lambda) {
    const BinMatrix g = build_G(lambda);
    REQUIRE(g * g == BinMatrix::identity(g.rows()));
  }
}

TEST_CASE("M_l") {
  CHECK(build_M(3) == from_rows({"000", "100", "100"}));
  for (int l = 1; l <= 129; l += 2) {
    const BinMatrix a = build_M(l);
    REQUIRE((a * a).is_zero());
    for (int r = 0; r < l; ++r)
      for (int c = r; c < l; ++c) REQUIRE(!a(r, c));
  }
}

TEST_CASE("entry_g follows Lucas and agrees with G") {
  CHECK(entry_g(3, 1, 16));
  CHECK(entry_g(5, 5, 16));
  CHECK(!entry_g(2, 3, 16));
  for (int k = 1; k <= 6; ++k) {
    const int n = 1 << k;
    const BinMatrix g = build_G(k);
    const auto p = oracle::pascal_mod2(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const bool lucas = entry_g(i, j, n);
        REQUIRE(lucas == (i >= j && p[n - j][i - j] == 1));
        REQUIRE(lucas == g(i - 1, j - 1));
      }
  }
  CHECK_THROWS_AS(entry_g(0, 1, 4), Error);
  CHECK_THROWS_AS(entry_g(1, 5, 4), Error);
}

TEST_CASE("columns and truncation") {
  const BinMatrix a = build_M(7);
  for (int j = 1; j <= 7; ++j) {
    const ColumnVector c = column(j, 7);
    REQUIRE(c.lo == 0);
    REQUIRE(c.hi == 7);
    for (int r = 0; r < 7; ++r) REQUIRE(c.at(r) == a(r, j - 1));
    for (int d = 0; d < 7; ++d) {
      const ColumnVector t = truncate_column(c, d);
      REQUIRE(t.lo == d);
      for (int r = d; r < 7; ++r) REQUIRE(t.at(r) == c.at(r));
    }
  }
  CHECK_THROWS_AS(column(0, 5), Error);
  CHECK_THROWS_AS(truncate_column(column(1, 5), 5), Error);
}

TEST_CASE("rank and kernel of M_{2s-1}") {
  for (int s = 1; s <= 64; ++s) {
    const int l = 2 * s - 1;
    const BinMatrix a = build_M(l);
    REQUIRE(rank_gf2(a) == s - 1);
    const auto basis = solution_basis(l);
    REQUIRE(basis.size() == static_cast<std::size_t>(s));
    BinMatrix span(s, l);
    for (int b = 0; b < s; ++b) {
      std::vector<FieldElement> v(static_cast<std::size_t>(l));
      for (int r = 0; r < l; ++r) {
        v[static_cast<std::size_t>(r)] = {basis[static_cast<std::size_t>(b)].at(r) ? 1u : 0u};
        span.set(b, r, basis[static_cast<std::size_t>(b)].at(r));
      }
      for (auto e : gr4sd::apply(a, v)) REQUIRE(e.is_zero());
    }
    // Rank-nullity: l - (s-1) = s, so s independent kernel vectors span it.
    REQUIRE(rank_gf2(span) == s);
  }
  CHECK_THROWS_AS(solution_basis(4), Error);
}

TEST_CASE("kronecker shape") {
  const BinMatrix a = from_rows({"11", "01"});
  const BinMatrix b = from_rows({"1", "1"});
  CHECK(kronecker(a, b) == from_rows({"11", "11", "01", "01"}));
}
