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

// Construction of every Euclidean self-dual cyclic code of length 2^k over
// GR(4,m).
//
// A nontrivial code is <(x-1)^{2^k-s} + 2(rho(x) + b(x)), 2(x-1)^s> with
// rho(x) = (x-1)^{2^{k-1}-s-1} and b(x) = sum_{j<s} b_j (x-1)^j. The vector
// (b_0, ..., b_{s-1}) is a GF(2)-linear image of a free parameter vector over
// GF(2^m); two independent routes compute it:
//
//   * truncated columns of M_{2s-1} (build_b_case2 / build_b_case3), and
//   * the closed binomial double sum (build_b_closed_form).
//
// The code identity is (case, s, bvec), with bvec taken modulo (x-1)^s.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gr4sd/bigint.hpp"
#include "gr4sd/gf2m.hpp"
#include "gr4sd/gr4.hpp"
#include "gr4sd/kronmat.hpp"
#include "gr4sd/polyring.hpp"

namespace gr4sd {

enum class CaseTag { Trivial, CaseII, CaseIII, K2Family };

std::string_view to_string(CaseTag tag) noexcept;
/// Throws Error{ParseError}.
CaseTag parse_case_tag(std::string_view text);

struct CodeSpec {
  int k = 1;
  CaseTag tag = CaseTag::Trivial;
  int s = 0;
  std::vector<FieldElement> params;
  std::vector<FieldElement> bvec;

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

/// <f, g2>; f is absent for the trivial code <2>.
struct GeneratorPair {
  std::optional<RingPoly> f;
  RingPoly g2;
};

/// Number of self-dual cyclic codes of length 2^k over GR(4,m), exact.
BigInt count(int k, int m);

/// Largest admissible s (0 when k = 1).
int max_s(int k);
CaseTag case_for(int k, int s);
/// Free parameters for a given s: 1 for s = 1, floor(s/2) + 1 otherwise.
int param_length(int s);
/// Index names of the parameters: a_{2i-1} for ceil(s/2)... and a_{2s-2}.
/// For s = 1 the single parameter is unnamed (rendered "b").
std::vector<int> param_names(int s);
/// Exponent of rho(x) = (x-1)^{2^{k-1}-s-1}; only defined for k >= 3.
int rho_exponent(int k, int s);

/// Odd s = 2nu+1. params = (a_{2nu+1}, a_{2nu+3}, ..., a_{4nu-1}, a_{4nu}).
FieldXM1 build_b_case2(const FieldCtx& field, int k, int nu, std::span<const FieldElement> params);
/// Even s = 2nu. params = (a_{2nu-1}, a_{2nu+1}, ..., a_{4nu-3}, a_{4nu-2}).
FieldXM1 build_b_case3(const FieldCtx& field, int k, int nu, std::span<const FieldElement> params);
/// Closed form with binomial coefficients mod 2, 2 <= s <= 2^{k-1}-1.
FieldXM1 build_b_closed_form(const FieldCtx& field, int k, int s, std::span<const FieldElement> params);

/// GF(2) matrix of the map params -> (b_0, ..., b_{s-1}); s rows.
BinMatrix param_matrix(int k, int s);
/// Symbolic b_s(x) in the style "a_1+(a_1+a_2)(x-1)+a_4(x-1)^2".
std::string render_b_expression(int k, int s);

/// rho(x) + b(x) as (x-1)-coordinates over the residue field; this is the
/// polynomial the self-duality congruence is checked on.
FieldXM1 two_part_xm1(const CodeSpec& spec, const FieldCtx& field);

GeneratorPair realize(const CodeSpec& spec, const RingCtx& ring);

/// Random-access and streaming view of the canonical code order: the trivial
/// code, then ascending s, then parameters as a base-2^m odometer with the
/// last parameter running fastest.
class CodeEnumerator {
 public:
  /// s_filter restricts to a single s (0 selects the trivial code).
  CodeEnumerator(int k, FieldCtx field, std::optional<int> s_filter = std::nullopt);

  int k() const noexcept { return k_; }
  const FieldCtx& field() const noexcept { return field_; }
  const BigInt& size() const noexcept { return total_; }

  /// Throws Error{IndexOutOfRange}.
  CodeSpec at(std::uint64_t index) const;

  /// Positions the stream so that next() yields at(index).
  void seek(std::uint64_t index);
  std::optional<CodeSpec> next();

 private:
  struct Block {
    int s;
    BigInt size;
    BinMatrix matrix;
  };

  CodeSpec make(const Block& block, std::span<const std::uint32_t> digits) const;

  int k_;
  FieldCtx field_;
  std::vector<Block> blocks_;
  BigInt total_;
  // stream state
  std::size_t block_ = 0;
  std::vector<std::uint32_t> digits_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<CodeSpec> enumerate(int k, const RingCtx& ring);

}  // namespace gr4sd
