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

#include <set>

#include "gr4sd/codegen.hpp"
#include "gr4sd/error.hpp"
#include "gr4sd/kronmat.hpp"
#include "gr4sd/verify.hpp"
#include "oracles.hpp"

using namespace gr4sd;

TEST_CASE("congruence") {
  const FieldCtx f = FieldCtx::standard(1);
  for (std::uint32_t b = 0; b < 2; ++b) {
    const std::vector<FieldElement> one{{b}};
    CHECK(check_congruence(2, 1, FieldXM1::from_prefix(f, 2, one)));
  }
  for (std::uint32_t b = 0; b < 4; ++b) {
    const std::vector<FieldElement> two{{b & 1}, {b >> 1}};
    CHECK_FALSE(check_congruence(2, 2, FieldXM1::from_prefix(f, 2, two)));
  }
  for (int k = 3; k <= 6; ++k) {
    const int half = 1 << (k - 1);
    for (int s = (1 << (k - 2)) + 1; s <= half - 1; ++s) {
      FieldXM1 rho(f, k);
      rho.comps[static_cast<std::size_t>(half - s - 1)] = f.one();
      CHECK(check_congruence(k, s, rho));
    }
  }
  CHECK_THROWS_AS(check_congruence(3, 0, FieldXM1(f, 3)), Error);
  CHECK_THROWS_AS(check_congruence(3, 5, FieldXM1(f, 3)), Error);
}

TEST_CASE("solution vectors") {
  for (int l = 1; l <= 33; l += 2) {
    std::vector<FieldElement> eps(static_cast<std::size_t>(l));
    eps.back() = {1};
    CHECK(check_solution_vector(l, eps));
    for (int j = 1; j <= l; ++j) {
      const ColumnVector c = column(j, l);
      std::vector<FieldElement> v(static_cast<std::size_t>(l));
      for (int r = 0; r < l; ++r) v[static_cast<std::size_t>(r)] = {c.at(r) ? 1u : 0u};
      REQUIRE(check_solution_vector(l, v));
    }
  }
  CHECK_FALSE(check_solution_vector(3, std::vector<FieldElement>{{1}, {0}, {0}}));
}

TEST_CASE("code sizes") {
  for (int m = 1; m <= 2; ++m) {
    const RingCtx r = RingCtx::lift(FieldCtx::standard(m));
    for (int k = 1; k <= 4; ++k) {
      const unsigned mn = static_cast<unsigned>(m) << k;
      const RingPoly two = RingPoly::constant(r, k, r.two());
      CHECK(code_size({std::nullopt, two}) == pow2(mn));
      CHECK(code_size({RingPoly::one(r, k), two}) == pow2(2 * mn));
      for (const auto& spec : enumerate(k, r)) REQUIRE(code_size(realize(spec, r)) == pow2(mn));
    }
    const RingPoly lone = xm1_pow(r, 3, 1).scaled(r.two());
    CHECK_FALSE(is_self_dual_structural({std::nullopt, lone}));
    CHECK(is_self_dual_structural({std::nullopt, RingPoly::constant(r, 3, r.two())}));
  }
}

TEST_CASE("brute-force dual matches a literal scan") {
  const std::vector<std::pair<int, int>> cases{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}};
  for (auto [k, m] : cases) {
    const RingCtx r = RingCtx::lift(FieldCtx::standard(m));
    for (const auto& spec : enumerate(k, r)) {
      const GeneratorPair pair = realize(spec, r);
      const CodewordSet dual = dual_bruteforce(pair, r);
      const auto literal = oracle::literal_dual(r, k, spanning_set(pair));
      REQUIRE(std::vector<std::uint64_t>(dual.words().begin(), dual.words().end()) == literal);
      const CodewordSet code = materialize(pair);
      REQUIRE(code == dual);
      REQUIRE(BigInt(code.size()) == code_size(pair));
    }
  }
}

TEST_CASE("materialized codes are closed and self-orthogonal") {
  const RingCtx r = RingCtx::lift(FieldCtx::standard(2));
  for (const auto& spec : enumerate(2, r)) {
    const GeneratorPair pair = realize(spec, r);
    const CodewordSet code = materialize(pair);
    for (const auto& row : spanning_set(pair)) REQUIRE(code.contains(row.coeffs()));
    for (auto w : code.words()) {
      const auto u = code.unpack(w);
      REQUIRE(code.pack(u) == w);
      for (auto w2 : code.words()) {
        const auto ip = oracle::inner(r, u, code.unpack(w2));
        REQUIRE(std::all_of(ip.begin(), ip.end(), [](int c) { return c == 0; }));
      }
    }
  }
}

TEST_CASE("a code that is not self-dual is detected") {
  const RingCtx r = RingCtx::lift(FieldCtx::standard(1));
  const GeneratorPair small{std::nullopt, xm1_pow(r, 3, 1).scaled(r.two())};
  CHECK_FALSE(materialize(small) == dual_bruteforce(small, r));
  CHECK(materialize(small).size() < dual_bruteforce(small, r).size());
}

TEST_CASE("distinct parameters give distinct codes") {
  for (int k = 2; k <= 3; ++k) {
    const RingCtx r = RingCtx::lift(FieldCtx::standard(1));
    std::set<std::vector<std::uint64_t>> seen;
    const auto codes = enumerate(k, r);
    for (const auto& spec : codes) {
      const CodewordSet c = materialize(realize(spec, r));
      seen.insert(std::vector<std::uint64_t>(c.words().begin(), c.words().end()));
    }
    CHECK(seen.size() == codes.size());
  }
}

TEST_CASE("guard") {
  const RingCtx r = RingCtx::lift(FieldCtx::standard(2));
  const GeneratorPair big{std::nullopt, RingPoly::constant(r, 4, r.two())};
  try {
    dual_bruteforce(big, r);
    FAIL("guard not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
  const RingCtx z4 = RingCtx::lift(FieldCtx::standard(1));
  const GeneratorPair other{std::nullopt, RingPoly::constant(z4, 2, z4.two())};
  CHECK_THROWS_AS(dual_bruteforce(other, r), Error);
}
