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

#include <random>
#include <set>

#include "gr4sd/codegen.hpp"
#include "gr4sd/error.hpp"
#include "gr4sd/verify.hpp"
#include "golden.hpp"

using namespace gr4sd;

namespace {

// 1 + q + 2 sum_{t=2}^{top} q^t.
BigInt geometric_total(int top, int m) {
  const BigInt q = pow2(static_cast<unsigned>(m));
  BigInt sum = 0;
  for (int t = 2; t <= top; ++t) sum += boost::multiprecision::pow(q, static_cast<unsigned>(t));
  return 1 + q + 2 * sum;
}

std::vector<FieldElement> unit(std::size_t len, std::size_t i) {
  std::vector<FieldElement> v(len);
  v[i] = {1};
  return v;
}

}  // namespace

TEST_CASE("reference counts") {
  CHECK(count(4, 1) == 59);
  CHECK(count(5, 1) == 1019);
  CHECK(count(6, 1) == 262139);
  CHECK(count(4, 2) == 677);
  CHECK(count(5, 2) == 174757);
  CHECK(count(6, 2) == BigInt("11453246117"));
  for (int m = 1; m <= 8; ++m) {
    CHECK(count(1, m) == 1);
    CHECK(count(2, m) == 1 + pow2(static_cast<unsigned>(m)));
    CHECK(count(4, m) == geometric_total(4, m));
    CHECK(count(5, m) == geometric_total(8, m));
    CHECK(count(6, m) == geometric_total(16, m));
  }
  CHECK_THROWS_AS(count(0, 1), Error);
}

TEST_CASE("parameter naming") {
  CHECK(param_names(1) == std::vector<int>{0});
  CHECK(param_names(2) == std::vector<int>{1, 2});
  CHECK(param_names(5) == std::vector<int>{5, 7, 8});
  CHECK(param_names(16) == std::vector<int>{15, 17, 19, 21, 23, 25, 27, 29, 30});
  for (int s = 2; s <= 63; ++s) CHECK(param_names(s).size() == static_cast<std::size_t>(param_length(s)));
  CHECK(case_for(2, 1) == CaseTag::K2Family);
  CHECK(case_for(4, 0) == CaseTag::Trivial);
  CHECK(case_for(4, 5) == CaseTag::CaseII);
  CHECK(case_for(4, 6) == CaseTag::CaseIII);
  CHECK(rho_exponent(4, 1) == 6);
  CHECK(max_s(1) == 0);
  CHECK(max_s(6) == 31);
}

TEST_CASE("b-vector constructions on unit parameters") {
  const FieldCtx f = FieldCtx::standard(1);
  // b_1 = b.
  CHECK(build_b_case2(f, 4, 0, unit(1, 0)).comps[0] == FieldElement{1});
  // b_3 = a_3 (x-1) + a_4 (x-1)^2.
  auto v = build_b_case2(f, 4, 1, unit(2, 0)).comps;
  CHECK((v[0].bits == 0 && v[1].bits == 1 && v[2].bits == 0));
  v = build_b_case2(f, 4, 1, unit(2, 1)).comps;
  CHECK((v[0].bits == 0 && v[1].bits == 0 && v[2].bits == 1));
  // b_2 = a_1 + (a_1 + a_2)(x-1).
  v = build_b_case3(f, 4, 1, unit(2, 0)).comps;
  CHECK((v[0].bits == 1 && v[1].bits == 1));
  v = build_b_case3(f, 4, 1, unit(2, 1)).comps;
  CHECK((v[0].bits == 0 && v[1].bits == 1));
  // b_4 = a_3 + a_5 (x-1)^2 + (a_3 + a_5 + a_6)(x-1)^3.
  v = build_b_case3(f, 4, 2, unit(3, 0)).comps;
  CHECK((v[0].bits == 1 && v[1].bits == 0 && v[2].bits == 0 && v[3].bits == 1));
  v = build_b_case3(f, 4, 2, unit(3, 1)).comps;
  CHECK((v[0].bits == 0 && v[1].bits == 0 && v[2].bits == 1 && v[3].bits == 1));
  for (int nu = 0; nu < 4; ++nu) {
    const std::vector<FieldElement> zero(static_cast<std::size_t>(nu + 1));
    for (auto c : build_b_case2(f, 5, nu, zero).comps) CHECK(c.is_zero());
  }
  CHECK_THROWS_AS(build_b_case2(f, 4, 1, unit(3, 0)), Error);
}

TEST_CASE("closed form agrees with column construction") {
  for (int m = 1; m <= 2; ++m) {
    const FieldCtx f = FieldCtx::standard(m);
    for (int k = 2; k <= 5; ++k) {
      for (int s = 2; s <= max_s(k); ++s) {
        const auto len = static_cast<std::size_t>(param_length(s));
        std::vector<FieldElement> p(len);
        std::uint64_t combos = std::uint64_t{1} << (m * static_cast<int>(len));
        if (combos > 4096) combos = 4096;
        std::mt19937 rng(static_cast<unsigned>(k * 100 + s));
        for (std::uint64_t c = 0; c < combos; ++c) {
          for (std::size_t i = 0; i < len; ++i) {
            p[i].bits = combos == (std::uint64_t{1} << (m * static_cast<int>(len)))
                            ? static_cast<std::uint32_t>(c >> (static_cast<std::size_t>(m) * i)) & f.mask()
                            : static_cast<std::uint32_t>(rng()) & f.mask();
          }
          const auto columns = s % 2 ? build_b_case2(f, k, s / 2, p) : build_b_case3(f, k, s / 2, p);
          REQUIRE(build_b_closed_form(f, k, s, p) == columns);
        }
      }
    }
  }
}

TEST_CASE("generators") {
  const RingCtx z4 = RingCtx::lift(FieldCtx::standard(1));
  CodeSpec trivial{2, CaseTag::Trivial, 0, {}, {}};
  const auto t = realize(trivial, z4);
  CHECK(!t.f);
  CHECK(t.g2 == RingPoly::constant(z4, 2, z4.two()));

  CodeSpec k2{2, CaseTag::K2Family, 1, {{1}}, {{1}}};
  const auto g = realize(k2, z4);
  REQUIRE(g.f);
  CHECK(*g.f == xm1_pow(z4, 2, 3) + RingPoly::constant(z4, 2, z4.two()));
  CHECK(g.g2 == xm1_pow(z4, 2, 1).scaled(z4.two()));

  const RingCtx r = RingCtx::lift(FieldCtx::standard(2));
  CodeSpec k4{4, CaseTag::CaseII, 1, {{3}}, {{3}}};
  const auto h = realize(k4, r);
  CHECK(*h.f == xm1_pow(r, 4, 15) + xm1_pow(r, 4, 6).scaled(r.two()) + RingPoly::constant(r, 4, r.twice({3})));
}

TEST_CASE("enumeration") {
  for (int m = 1; m <= 2; ++m) {
    const RingCtx r = RingCtx::lift(FieldCtx::standard(m));
    for (int k = 1; k <= 4; ++k) {
      const auto codes = enumerate(k, r);
      REQUIRE(BigInt(codes.size()) == count(k, m));
      CHECK(codes.front().tag == CaseTag::Trivial);
      std::set<std::pair<int, std::vector<FieldElement>>> ids;
      for (std::size_t i = 0; i < codes.size(); ++i) {
        ids.insert({codes[i].s, codes[i].bvec});
        if (i) REQUIRE(codes[i - 1].s <= codes[i].s);
      }
      CHECK(ids.size() == codes.size());
      CodeEnumerator it(k, r.field());
      for (std::size_t i = 0; i < codes.size(); ++i) REQUIRE(it.at(i) == codes[i]);
      CHECK_THROWS_AS(it.at(codes.size()), Error);
    }
  }
  const RingCtx z4 = RingCtx::lift(FieldCtx::standard(1));
  CodeEnumerator s2(3, z4.field(), 2);
  CHECK(s2.size() == 4);
  CodeEnumerator k2(2, z4.field());
  CHECK(k2.at(1).params == std::vector<FieldElement>{{0}});
  CHECK(k2.at(2).params == std::vector<FieldElement>{{1}});
}

TEST_CASE("windows concatenate to the full stream") {
  const FieldCtx f = FieldCtx::standard(2);
  CodeEnumerator full(4, f);
  std::vector<CodeSpec> all;
  while (auto c = full.next()) all.push_back(*c);
  std::vector<CodeSpec> pieces;
  for (std::uint64_t off = 0; off < all.size(); off += 100) {
    CodeEnumerator w(4, f);
    w.seek(off);
    for (int i = 0; i < 100; ++i) {
      auto c = w.next();
      if (!c) break;
      pieces.push_back(*c);
    }
  }
  CHECK(pieces == all);
}

TEST_CASE("symbolic rendering against golden data") {
  const auto entries = golden::load(GR4SD_DATA_DIR "/golden_b_expressions.txt");
  REQUIRE(entries.size() == 53);
  std::vector<std::pair<int, int>> differ;
  for (const auto& e : entries) {
    const std::string ours = render_b_expression(e.k, e.s);
    // Rendering is a faithful picture of the matrix.
    REQUIRE(golden::matrix_of(golden::parse(ours), e.s) == param_matrix(e.k, e.s));
    if (ours != e.expr) differ.emplace_back(e.k, e.s);
  }
  // The golden b_31 for length 64 omits the a_33 (x-1)^3 term.
  CHECK(differ == std::vector<std::pair<int, int>>{{6, 31}});
}

TEST_CASE("golden b_31 for length 64 is not self-dual") {
  const auto entries = golden::load(GR4SD_DATA_DIR "/golden_b_expressions.txt");
  const FieldCtx f = FieldCtx::standard(1);
  for (const auto& e : entries) {
    if (e.k != 6 || e.s != 31) continue;
    const BinMatrix golden_matrix = golden::matrix_of(golden::parse(e.expr), e.s);
    const BinMatrix ours = param_matrix(6, 31);
    int differing = 0;
    for (int r = 0; r < 31; ++r)
      for (int c = 0; c < ours.cols(); ++c) differing += golden_matrix(r, c) != ours(r, c);
    CHECK(differing == 1);
    // a_33 is the second parameter.
    std::vector<FieldElement> p(static_cast<std::size_t>(ours.cols()));
    p[1] = {1};
    const CodeSpec spec{6, CaseTag::CaseII, 31, p, gr4sd::apply(golden_matrix, p)};
    CHECK_FALSE(check_congruence(6, 31, two_part_xm1(spec, f)));
    CHECK_FALSE(is_self_dual_structural(realize(spec, RingCtx::lift(f))));
  }
}
