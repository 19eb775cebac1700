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
#include <optional>
#include <string>
#include <string_view>

namespace gr4sd {

/// An element of GF(2^m): bit i holds the coefficient of z^i.
struct FieldElement {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const noexcept { return bits == 0; }
  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(2^m) = Z_2[z]/(modulus). Cheap to copy, immutable after construction.
///
/// The modulus is stored as a bit vector with bit i holding the coefficient of
/// z^i, so z^2+z+1 is 0b111. Supported degrees are 1..16; irreducibility is
/// checked by exhaustive trial division when the context is built.
class FieldCtx {
 public:
  using Element = FieldElement;

  static constexpr int kMaxDegree = 16;

  /// Throws Error{DegreeMismatch} or Error{ReducibleModulus}.
  static FieldCtx make(int m, std::uint32_t modulus);

  /// Context over the built-in modulus for m (1..8).
  static FieldCtx standard(int m);

  int degree() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t order() const noexcept { return std::uint32_t{1} << m_; }
  std::uint32_t mask() const noexcept { return order() - 1; }

  Element zero() const noexcept { return {}; }
  Element one() const noexcept { return {1}; }
  /// Throws Error{RangeError} unless bits < 2^m.
  Element element(std::uint32_t bits) const;

  Element add(Element a, Element b) const noexcept { return {a.bits ^ b.bits}; }
  Element sub(Element a, Element b) const noexcept { return {a.bits ^ b.bits}; }
  Element neg(Element a) const noexcept { return a; }
  Element mul(Element a, Element b) const noexcept;
  /// Throws Error{DivisionByZero} for a = 0.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const noexcept;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    return a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldCtx(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {}

  int m_;
  std::uint32_t modulus_;
};

FieldCtx field_make(int m, std::uint32_t modulus);
FieldElement field_mul(const FieldCtx& ctx, FieldElement a, FieldElement b);
FieldElement field_inv(const FieldCtx& ctx, FieldElement a);

/// Degree of a nonzero binary polynomial, -1 for zero.
int gf2_degree(std::uint64_t poly) noexcept;
/// Exhaustive trial division by every polynomial of degree 1..deg/2.
bool gf2_is_irreducible(std::uint64_t poly) noexcept;

/// Built-in modulus table, m = 1..8.
std::optional<std::uint32_t> builtin_modulus(int m) noexcept;

/// Lowercase hex of the bit vector (least significant bit = constant term).
std::string to_hex(FieldElement a);
/// Parses lowercase or uppercase hex; throws Error{ParseError} or
/// Error{RangeError} when the value does not fit in the field.
FieldElement parse_field_element(const FieldCtx& ctx, std::string_view text);

}  // namespace gr4sd
