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

#pragma once

// Reference implementations used only by tests. Everything here works on
// plain integers and is deliberately naive.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gr4sd/gr4.hpp"
#include "gr4sd/polyring.hpp"
#include "gr4sd/verify.hpp"

namespace oracle {

// Carry-less product of two GF(2) polynomials.
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1u) out ^= a << i;
  }
  return out;
}

// Remainder of GF(2) long division.
inline std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t mod) {
  int dm = 63;
  while (dm >= 0 && !((mod >> dm) & 1u)) --dm;
  for (int d = 63; d >= dm; --d) {
    if ((a >> d) & 1u) a ^= mod << (d - dm);
  }
  return a;
}

inline std::uint32_t field_mul(std::uint32_t a, std::uint32_t b, std::uint32_t mod) {
  return static_cast<std::uint32_t>(gf2_mod(clmul(a, b), mod));
}

// Z_4[z] polynomials as integer coefficient vectors, constant first.
using Z4Poly = std::vector<int>;

inline Z4Poly z4_mul_mod(const Z4Poly& a, const Z4Poly& b, const Z4Poly& modulus) {
  const std::size_t m = modulus.size() - 1;
  Z4Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t d = prod.size(); d-- > m;) {
    const int c = ((prod[d] % 4) + 4) % 4;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= m; ++t) prod[d - m + t] -= c * modulus[t];
  }
  Z4Poly out(m, 0);
  for (std::size_t i = 0; i < m; ++i) out[i] = ((prod[i] % 4) + 4) % 4;
  return out;
}

inline Z4Poly to_z4(const gr4sd::RingCtx& ring, gr4sd::RingElement a) {
  const auto raw = gr4sd::z4_coefficients(ring, a);
  return Z4Poly(raw.begin(), raw.end());
}

// Z_4-valued inner product computed coefficientwise over Z_4[z]/(modulus).
inline Z4Poly inner(const gr4sd::RingCtx& ring, const std::vector<gr4sd::RingElement>& u,
                    std::span<const gr4sd::RingElement> v) {
  const auto& mod4 = ring.modulus4();
  const Z4Poly modulus(mod4.begin(), mod4.end());
  Z4Poly acc(static_cast<std::size_t>(ring.degree()), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Z4Poly p = z4_mul_mod(to_z4(ring, u[i]), to_z4(ring, v[i]), modulus);
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] = (acc[t] + p[t]) % 4;
  }
  return acc;
}

// Every vector of R^n tested against every spanning row.
inline std::vector<std::uint64_t> literal_dual(const gr4sd::RingCtx& ring, int k,
                                               const std::vector<gr4sd::RingPoly>& rows) {
  const std::size_t n = gr4sd::cyclic_length(k);
  const std::uint64_t q = ring.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  gr4sd::CodewordSet layout(ring, k, {});
  std::vector<std::uint64_t> out;
  std::vector<gr4sd::RingElement> u(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = ring.unpack(static_cast<std::uint32_t>(r % q));
      r /= q;
    }
    const bool ok = std::all_of(rows.begin(), rows.end(), [&](const gr4sd::RingPoly& row) {
      const Z4Poly ip = inner(ring, u, row.coeffs());
      return std::all_of(ip.begin(), ip.end(), [](int c) { return c == 0; });
    });
    if (ok) out.push_back(layout.pack(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Pascal's triangle mod 2.
inline std::vector<std::vector<int>> pascal_mod2(int n) {
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int r = 0; r < n; ++r) {
    c[r][0] = 1;
    for (int j = 1; j <= r; ++j) c[r][j] = (c[r - 1][j - 1] + (j < r ? c[r - 1][j] : 0)) % 2;
  }
  return c;
}

// Cyclic product over Z_4 (m = 1) with integer coefficients.
inline Z4Poly z4_cyclic_mul(const Z4Poly& a, const Z4Poly& b) {
  const std::size_t n = a.size();
  Z4Poly out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] = (out[(i + j) % n] + a[i] * b[j]) % 4;
  }
  return out;
}

}  // namespace oracle
