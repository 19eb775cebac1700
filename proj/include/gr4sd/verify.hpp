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

#include <cstdint>
#include <span>
#include <vector>

#include "gr4sd/bigint.hpp"
#include "gr4sd/codegen.hpp"
#include "gr4sd/polyring.hpp"

namespace gr4sd {

/// b(x) + x^{-s} b(x^{-1}) == (x-1)^{2^{k-1}-s}  (mod (x-1)^s) over GF(2^m).
/// c may carry components beyond s-1 (e.g. the rho term). Throws
/// Error{RangeError} unless 1 <= s <= 2^{k-1}.
bool check_congruence(int k, int s, const FieldXM1& c);

/// M_l * B == 0 over GF(2^m).
bool check_solution_vector(int l, std::span<const FieldElement> b);

/// Pivot counts of the chain-ring standard form of a spanning set:
/// |C| = 4^{m * unit_pivots} * 2^{m * two_pivots}.
struct StandardForm {
  int unit_pivots = 0;
  int two_pivots = 0;
  int m = 1;

  unsigned log2_size() const noexcept { return static_cast<unsigned>(m * (2 * unit_pivots + two_pivots)); }
  BigInt size() const { return pow2(log2_size()); }
};

/// Rows of the spanning set {x^i f, x^i g2 : 0 <= i < 2^k}.
std::vector<RingPoly> spanning_set(const GeneratorPair& pair);
StandardForm standard_form(std::span<const RingPoly> rows);
BigInt code_size(const GeneratorPair& pair);

/// f*chi(f), f*chi(g2), g2*chi(g2) all vanish and |C| = 4^{m 2^{k-1}}.
bool is_self_dual_structural(const GeneratorPair& pair);

/// Explicit set of codewords of length 2^k over GR(4,m), stored packed.
///
/// A word is packed as two bit planes: the beta0 digits of coordinate i sit in
/// bits [i*m, (i+1)*m), the beta1 digits in the same positions shifted up by
/// 2^k * m. Only words of at most 64 bits are supported.
class CodewordSet {
 public:
  CodewordSet(RingCtx ring, int k, std::vector<std::uint64_t> words);

  const RingCtx& ring() const noexcept { return ring_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool contains(std::span<const RingElement> word) const;
  std::uint64_t pack(std::span<const RingElement> word) const;
  std::vector<RingElement> unpack(std::uint64_t word) const;

  friend bool operator==(const CodewordSet& a, const CodewordSet& b) {
    return a.k_ == b.k_ && a.ring_ == b.ring_ && a.words_ == b.words_;
  }

 private:
  RingCtx ring_;
  int k_;
  std::vector<std::uint64_t> words_;  // sorted, unique
};

/// Largest ambient space |R^{2^k}| = 2^{2 m 2^k} the explicit routines accept.
inline constexpr unsigned kBruteForceLog2Guard = 32;

/// All R-linear combinations of the spanning set. Throws Error{TooLarge}.
CodewordSet materialize(const GeneratorPair& pair);

/// The Euclidean dual found by exhaustive search of R^{2^k}. The search is
/// split in two halves: every left half and every right half gets its
/// syndrome against the spanning set, and matching pairs are exactly the
/// vectors orthogonal to the code. Throws Error{TooLarge} beyond the guard.
CodewordSet dual_bruteforce(const GeneratorPair& pair, const RingCtx& ring);

}  // namespace gr4sd
