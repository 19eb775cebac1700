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

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gr4sd/gf2m.hpp"

namespace gr4sd {

/// beta0 + 2*beta1 with both digits in the Z_2-coefficient copy of GF(2^m)
/// inside GR(4,m). The digits are taken coefficientwise: the Z_4 coefficient
/// of z^i is bit i of beta0 plus twice bit i of beta1.
struct RingElement {
  FieldElement beta0;
  FieldElement beta1;

  constexpr bool is_zero() const noexcept { return beta0.is_zero() && beta1.is_zero(); }
  friend constexpr auto operator<=>(const RingElement&, const RingElement&) = default;
};

/// GR(4,m) = Z_4[z]/(modulus4) where modulus4 reduces mod 2 to the field
/// modulus. Cheap to copy; the optional multiplication table is shared.
class RingCtx {
 public:
  using Element = RingElement;

  /// Largest m for which a full multiplication table is precomputed.
  static constexpr int kTableDegree = 4;

  /// modulus4 holds m+1 coefficients in Z_4, constant term first, monic.
  /// Throws Error{NotBasicIrreducible} when its reduction mod 2 differs from
  /// the field modulus, Error{DegreeMismatch} when it is not monic of degree m.
  static RingCtx make(const FieldCtx& field, std::vector<std::uint8_t> modulus4);
  /// Same, but the residue field is derived from the reduction of modulus4;
  /// a reducible reduction raises Error{NotBasicIrreducible}.
  static RingCtx make(int m, std::vector<std::uint8_t> modulus4);
  /// The 0/1 lift of the field modulus.
  static RingCtx lift(const FieldCtx& field);

  const FieldCtx& field() const noexcept { return field_; }
  int degree() const noexcept { return field_.degree(); }
  const std::vector<std::uint8_t>& modulus4() const noexcept { return modulus4_; }
  /// |R| = 4^m.
  std::uint64_t size() const noexcept { return std::uint64_t{1} << (2 * degree()); }

  Element zero() const noexcept { return {}; }
  Element one() const noexcept { return {field_.one(), {}}; }
  Element two() const noexcept { return {{}, field_.one()}; }
  /// The image of an integer under Z -> Z_4 -> R.
  Element from_int(int value) const noexcept;
  /// Natural embedding of a field element (0/1 coefficients).
  Element embed(FieldElement a) const noexcept { return {a, {}}; }
  /// 2 * embed(a).
  Element twice(FieldElement a) const noexcept { return {{}, a}; }

  Element add(Element a, Element b) const noexcept {
    // Coefficientwise Z_4 addition: the carry out of the low digit is b0 & c0.
    return {{a.beta0.bits ^ b.beta0.bits},
            {a.beta1.bits ^ b.beta1.bits ^ (a.beta0.bits & b.beta0.bits)}};
  }
  Element neg(Element a) const noexcept { return {a.beta0, {a.beta1.bits ^ a.beta0.bits}}; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element mul(Element a, Element b) const noexcept;
  Element times_two(Element a) const noexcept { return {{}, a.beta0}; }

  bool is_unit(Element a) const noexcept { return !a.beta0.is_zero(); }
  /// Throws Error{DivisionByZero} for non-units.
  Element inv(Element a) const;

  /// Dense index in [0, 4^m): beta0 in the low m bits, beta1 above.
  std::uint32_t pack(Element a) const noexcept {
    return a.beta0.bits | (a.beta1.bits << degree());
  }
  Element unpack(std::uint32_t packed) const noexcept {
    return {{packed & field_.mask()}, {(packed >> degree()) & field_.mask()}};
  }

  friend bool operator==(const RingCtx& a, const RingCtx& b) noexcept {
    return a.field_ == b.field_ && a.modulus4_ == b.modulus4_;
  }

 private:
  RingCtx(FieldCtx field, std::vector<std::uint8_t> modulus4);
  Element mul_slow(Element a, Element b) const noexcept;

  FieldCtx field_;
  std::vector<std::uint8_t> modulus4_;
  std::shared_ptr<const std::vector<std::uint16_t>> table_;
};

RingCtx ring_make(const FieldCtx& field, std::vector<std::uint8_t> modulus4);
RingElement ring_mul(const RingCtx& ctx, RingElement a, RingElement b);
/// Reduction R -> GF(2^m); kernel 2R.
FieldElement bar(const RingCtx& ctx, RingElement a);
std::pair<FieldElement, FieldElement> two_adic(const RingCtx& ctx, RingElement a);
RingElement from_two_adic(const RingCtx& ctx, FieldElement beta0, FieldElement beta1);

/// Z_4 coefficient vector (length m) of a ring element, constant term first.
std::vector<std::uint8_t> z4_coefficients(const RingCtx& ctx, RingElement a);
RingElement from_z4_coefficients(const RingCtx& ctx, std::span<const std::uint8_t> coeffs);

/// "beta0+2*beta1" with both digits in field hex.
std::string to_string(const RingElement& a);
/// Accepts "h0+2*h1" or a bare field hex "h0" (beta1 = 0).
RingElement parse_ring_element(const RingCtx& ctx, std::string_view text);

}  // namespace gr4sd
