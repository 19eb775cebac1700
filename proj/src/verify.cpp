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

#include "gr4sd/verify.hpp"

#include <algorithm>
#include <utility>

#include "gr4sd/error.hpp"
#include "gr4sd/kronmat.hpp"

namespace gr4sd {

namespace {

// Two bit planes (beta0 digits, beta1 digits) of a vector over GR(4,m).
struct Planes {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

Planes add(Planes a, Planes b) noexcept { return {a.lo ^ b.lo, a.hi ^ b.hi ^ (a.lo & b.lo)}; }
Planes neg(Planes a) noexcept { return {a.lo, a.hi ^ a.lo}; }

void check_guard(const RingCtx& ring, int k) {
  const std::uint64_t bits = 2ull * static_cast<std::uint64_t>(ring.degree()) << k;
  if (bits > kBruteForceLog2Guard) {
    throw Error(Errc::TooLarge, "ambient space 2^" + std::to_string(bits) + " exceeds the brute-force guard 2^" +
                                    std::to_string(kBruteForceLog2Guard));
  }
}

// Gaussian elimination over GF(2^m).
int field_rank(const FieldCtx& field, std::vector<std::vector<FieldElement>> rows, std::size_t ncols) {
  int rank = 0;
  for (std::size_t c = 0; c < ncols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return !r[c].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    auto& p = rows[static_cast<std::size_t>(rank)];
    const FieldElement inv = field.inv(p[c]);
    for (auto& v : p) v = field.mul(v, inv);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      const FieldElement e = rows[r][c];
      if (e.is_zero()) continue;
      for (std::size_t j = c; j < ncols; ++j) rows[r][j] = field.sub(rows[r][j], field.mul(e, p[j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool check_congruence(int k, int s, const FieldXM1& c) {
  const std::uint64_t n = cyclic_length(k);
  if (s < 1 || static_cast<std::uint64_t>(s) > n / 2) {
    throw Error(Errc::RangeError, "s=" + std::to_string(s) + " outside 1.." + std::to_string(n / 2));
  }
  if (c.k != k) throw Error(Errc::ContextMismatch, "vector length does not match k");
  const FieldPoly b = from_xm1(c);
  const FieldPoly lhs = b + chi(b).shifted(n - static_cast<std::uint64_t>(s));
  const FieldPoly target = xm1_pow(c.ctx, k, n / 2 - static_cast<std::uint64_t>(s));
  const FieldXM1 diff = to_xm1(lhs - target);
  for (int j = 0; j < s; ++j) {
    if (!diff.comps[static_cast<std::size_t>(j)].is_zero()) return false;
  }
  return true;
}

bool check_solution_vector(int l, std::span<const FieldElement> b) {
  if (l < 1 || static_cast<std::size_t>(l) != b.size()) throw Error(Errc::RangeError, "vector length must equal l");
  const auto image = gr4sd::apply(build_M(l), b);
  return std::all_of(image.begin(), image.end(), [](FieldElement e) { return e.is_zero(); });
}

std::vector<RingPoly> spanning_set(const GeneratorPair& pair) {
  std::vector<RingPoly> rows;
  const auto n = static_cast<std::uint64_t>(pair.g2.length());
  if (pair.f) {
    pair.f->check_compatible(pair.g2);
    for (std::uint64_t i = 0; i < n; ++i) rows.push_back(pair.f->shifted(i));
  }
  for (std::uint64_t i = 0; i < n; ++i) rows.push_back(pair.g2.shifted(i));
  return rows;
}

// Column by column, a unit entry in a not-yet-used row becomes a pivot and is
// cleared from every other unused row. What remains lies in 2R^n and is zero
// on all unit-pivot columns; its 2-digits are ranked over the residue field.
StandardForm standard_form(std::span<const RingPoly> rows) {
  StandardForm out;
  if (rows.empty()) return out;
  const RingCtx& ring = rows.front().ctx();
  out.m = ring.degree();
  const std::size_t n = rows.front().length();

  std::vector<std::vector<RingElement>> active;
  active.reserve(rows.size());
  for (const auto& r : rows) {
    rows.front().check_compatible(r);
    active.emplace_back(r.coeffs().begin(), r.coeffs().end());
  }

  for (std::size_t c = 0; c < n; ++c) {
    auto pivot = std::find_if(active.begin(), active.end(), [&](const auto& r) { return ring.is_unit(r[c]); });
    if (pivot == active.end()) continue;
    std::vector<RingElement> p = std::move(*pivot);
    active.erase(pivot);
    const RingElement inv = ring.inv(p[c]);
    for (auto& v : p) v = ring.mul(inv, v);
    for (auto& r : active) {
      const RingElement e = r[c];
      if (e.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!p[j].is_zero()) r[j] = ring.sub(r[j], ring.mul(e, p[j]));
      }
    }
    ++out.unit_pivots;
  }

  std::vector<std::vector<FieldElement>> twos;
  twos.reserve(active.size());
  for (const auto& r : active) {
    std::vector<FieldElement> digits(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!r[j].beta0.is_zero()) throw Error(Errc::RangeError, "unit entry left after pivoting");
      digits[j] = r[j].beta1;
      nonzero = nonzero || !digits[j].is_zero();
    }
    if (nonzero) twos.push_back(std::move(digits));
  }
  out.two_pivots = field_rank(ring.field(), std::move(twos), n);
  return out;
}

BigInt code_size(const GeneratorPair& pair) {
  const auto rows = spanning_set(pair);
  return standard_form(rows).size();
}

bool is_self_dual_structural(const GeneratorPair& pair) {
  const RingPoly& g = pair.g2;
  if (pair.f) {
    const RingPoly& f = *pair.f;
    if (!(f * chi(f)).is_zero() || !(f * chi(g)).is_zero()) return false;
  }
  if (!(g * chi(g)).is_zero()) return false;
  const auto rows = spanning_set(pair);
  const StandardForm form = standard_form(rows);
  return form.log2_size() == static_cast<unsigned>(g.ctx().degree()) * static_cast<unsigned>(g.length());
}

CodewordSet::CodewordSet(RingCtx ring, int k, std::vector<std::uint64_t> words)
    : ring_(std::move(ring)), k_(k), words_(std::move(words)) {
  if (2ull * static_cast<std::uint64_t>(ring_.degree()) * cyclic_length(k) > 64) {
    throw Error(Errc::TooLarge, "codewords do not fit in 64 bits");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

std::uint64_t CodewordSet::pack(std::span<const RingElement> word) const {
  const std::size_t n = cyclic_length(k_);
  if (word.size() != n) throw Error(Errc::RangeError, "word length differs from 2^k");
  const auto m = static_cast<unsigned>(ring_.degree());
  Planes p;
  for (std::size_t i = 0; i < n; ++i) {
    p.lo |= std::uint64_t{word[i].beta0.bits} << (i * m);
    p.hi |= std::uint64_t{word[i].beta1.bits} << (i * m);
  }
  return p.lo | (p.hi << (n * m));
}

std::vector<RingElement> CodewordSet::unpack(std::uint64_t word) const {
  const std::size_t n = cyclic_length(k_);
  const auto m = static_cast<unsigned>(ring_.degree());
  const std::uint64_t mask = ring_.field().mask();
  std::vector<RingElement> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].beta0.bits = static_cast<std::uint32_t>((word >> (i * m)) & mask);
    out[i].beta1.bits = static_cast<std::uint32_t>((word >> (n * m + i * m)) & mask);
  }
  return out;
}

bool CodewordSet::contains(std::span<const RingElement> word) const {
  return std::binary_search(words_.begin(), words_.end(), pack(word));
}

CodewordSet materialize(const GeneratorPair& pair) {
  const RingCtx& ring = pair.g2.ctx();
  const int k = pair.g2.k();
  check_guard(ring, k);
  const std::size_t n = pair.g2.length();
  const unsigned plane = static_cast<unsigned>(n) * static_cast<unsigned>(ring.degree());
  const std::uint64_t lo_mask = (std::uint64_t{1} << plane) - 1;
  const auto split = [&](std::uint64_t w) { return Planes{w & lo_mask, w >> plane}; };
  const auto join = [&](Planes p) { return p.lo | (p.hi << plane); };

  CodewordSet layout(ring, k, {});
  std::vector<std::uint64_t> span{0};
  for (const auto& row : spanning_set(pair)) {
    std::vector<std::uint64_t> multiples;
    for (std::uint32_t e = 0; e < ring.size(); ++e) {
      multiples.push_back(layout.pack(row.scaled(ring.unpack(e)).coeffs()));
    }
    std::sort(multiples.begin(), multiples.end());
    multiples.erase(std::unique(multiples.begin(), multiples.end()), multiples.end());
    const bool redundant = std::all_of(multiples.begin(), multiples.end(), [&](std::uint64_t w) {
      return std::binary_search(span.begin(), span.end(), w);
    });
    if (redundant) continue;
    std::vector<std::uint64_t> next;
    next.reserve(span.size() * multiples.size());
    for (auto mu : multiples) {
      const Planes pm = split(mu);
      for (auto c : span) next.push_back(join(add(split(c), pm)));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    span = std::move(next);
  }
  return CodewordSet(ring, k, std::move(span));
}

CodewordSet dual_bruteforce(const GeneratorPair& pair, const RingCtx& ring) {
  if (!(pair.g2.ctx() == ring)) throw Error(Errc::ContextMismatch, "code lives over a different ring");
  const int k = pair.g2.k();
  check_guard(ring, k);
  const std::size_t n = pair.g2.length();
  const std::size_t half = n / 2;
  const auto m = static_cast<unsigned>(ring.degree());
  const std::uint32_t elements = static_cast<std::uint32_t>(ring.size());
  const std::uint32_t elem_mask = elements - 1;
  const auto rows = spanning_set(pair);

  // Syndrome contribution of value e at coordinate i: component j is e * row_j[i].
  std::vector<std::vector<Planes>> contrib(n, std::vector<Planes>(elements));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t e = 0; e < elements; ++e) {
      Planes p;
      for (std::size_t j = 0; j < rows.size(); ++j) {
        const RingElement v = ring.mul(ring.unpack(e), rows[j][i]);
        p.lo |= std::uint64_t{v.beta0.bits} << (j * m);
        p.hi |= std::uint64_t{v.beta1.bits} << (j * m);
      }
      contrib[i][e] = p;
    }
  }
  const auto key = [](Planes p) { return p.lo | (p.hi << 32); };

  const std::uint64_t half_count = std::uint64_t{1} << (2 * m * half);
  const auto syndrome = [&](std::uint64_t u, std::size_t offset) {
    Planes acc;
    for (std::size_t i = 0; i < half; ++i) {
      acc = add(acc, contrib[offset + i][static_cast<std::uint32_t>(u >> (2 * m * i)) & elem_mask]);
    }
    return acc;
  };
  // Plane layout of a half vector placed at coordinates offset..offset+half-1.
  const auto placed = [&](std::uint64_t u, std::size_t offset) {
    Planes p;
    for (std::size_t i = 0; i < half; ++i) {
      const RingElement e = ring.unpack(static_cast<std::uint32_t>(u >> (2 * m * i)) & elem_mask);
      p.lo |= std::uint64_t{e.beta0.bits} << ((offset + i) * m);
      p.hi |= std::uint64_t{e.beta1.bits} << ((offset + i) * m);
    }
    return p;
  };

  std::vector<std::pair<std::uint64_t, std::uint64_t>> left;
  left.reserve(half_count);
  for (std::uint64_t u = 0; u < half_count; ++u) left.emplace_back(key(syndrome(u, 0)), u);
  std::sort(left.begin(), left.end());

  const unsigned plane = static_cast<unsigned>(n) * m;
  std::vector<std::uint64_t> dual;
  for (std::uint64_t v = 0; v < half_count; ++v) {
    const std::uint64_t want = key(neg(syndrome(v, half)));
    auto range = std::equal_range(left.begin(), left.end(), std::pair<std::uint64_t, std::uint64_t>{want, 0},
                                  [](const auto& a, const auto& b) { return a.first < b.first; });
    if (range.first == range.second) continue;
    const Planes right = placed(v, half);
    for (auto it = range.first; it != range.second; ++it) {
      const Planes l = placed(it->second, 0);
      dual.push_back((l.lo | right.lo) | ((l.hi | right.hi) << plane));
    }
  }
  return CodewordSet(ring, k, std::move(dual));
}

}  // namespace gr4sd
