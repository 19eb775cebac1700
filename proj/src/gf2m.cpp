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

#include "gr4sd/gf2m.hpp"

#include <array>
#include <bit>
#include <charconv>

#include "gr4sd/error.hpp"

namespace gr4sd {

namespace {

// Remainder of a modulo b over Z_2.
std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b) noexcept {
  const int db = gf2_degree(b);
  for (int da = gf2_degree(a); da >= db; da = gf2_degree(a)) a ^= b << (da - db);
  return a;
}

constexpr std::array<std::uint32_t, 9> kBuiltin = {
    0,
    0x3,    // z+1
    0x7,    // z^2+z+1
    0xb,    // z^3+z+1
    0x13,   // z^4+z+1
    0x25,   // z^5+z^2+1
    0x43,   // z^6+z+1
    0x83,   // z^7+z+1
    0x11d,  // z^8+z^4+z^3+z^2+1
};

}  // namespace

int gf2_degree(std::uint64_t poly) noexcept {
  return poly == 0 ? -1 : 63 - std::countl_zero(poly);
}

bool gf2_is_irreducible(std::uint64_t poly) noexcept {
  const int d = gf2_degree(poly);
  if (d < 1) return false;
  for (std::uint64_t divisor = 2; gf2_degree(divisor) <= d / 2; ++divisor) {
    if (gf2_mod(poly, divisor) == 0) return false;
  }
  return true;
}

std::optional<std::uint32_t> builtin_modulus(int m) noexcept {
  if (m < 1 || m >= static_cast<int>(kBuiltin.size())) return std::nullopt;
  return kBuiltin[static_cast<std::size_t>(m)];
}

FieldCtx FieldCtx::make(int m, std::uint32_t modulus) {
  if (m < 1 || m > kMaxDegree) {
    throw Error(Errc::DegreeMismatch, "extension degree must be in 1.." + std::to_string(kMaxDegree));
  }
  if (gf2_degree(modulus) != m) {
    throw Error(Errc::DegreeMismatch, "modulus degree " + std::to_string(gf2_degree(modulus)) +
                                          " does not match m=" + std::to_string(m));
  }
  if (!gf2_is_irreducible(modulus)) {
    throw Error(Errc::ReducibleModulus, "modulus 0x" + to_hex({modulus}) + " factors over Z_2");
  }
  return FieldCtx(m, modulus);
}

FieldCtx FieldCtx::standard(int m) {
  const auto modulus = builtin_modulus(m);
  if (!modulus) throw Error(Errc::RangeError, "no built-in modulus for m=" + std::to_string(m));
  return make(m, *modulus);
}

FieldElement FieldCtx::element(std::uint32_t bits) const {
  if (bits > mask()) throw Error(Errc::RangeError, "element does not fit in GF(2^" + std::to_string(m_) + ")");
  return {bits};
}

FieldElement FieldCtx::mul(Element a, Element b) const noexcept {
  std::uint32_t acc = 0;
  std::uint32_t x = a.bits;
  const std::uint32_t top = std::uint32_t{1} << m_;
  for (std::uint32_t y = b.bits; y != 0; y >>= 1) {
    if (y & 1u) acc ^= x;
    x <<= 1;
    if (x & top) x ^= modulus_;
  }
  return {acc};
}

FieldElement FieldCtx::pow(Element a, std::uint64_t e) const noexcept {
  Element result = one();
  for (; e != 0; e >>= 1) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
  }
  return result;
}

FieldElement FieldCtx::inv(Element a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  // a^(2^m - 2) in the multiplicative group of order 2^m - 1.
  return pow(a, order() - 2);
}

FieldCtx field_make(int m, std::uint32_t modulus) { return FieldCtx::make(m, modulus); }

FieldElement field_mul(const FieldCtx& ctx, FieldElement a, FieldElement b) { return ctx.mul(a, b); }

FieldElement field_inv(const FieldCtx& ctx, FieldElement a) { return ctx.inv(a); }

std::string to_hex(FieldElement a) {
  std::array<char, 16> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), a.bits, 16);
  return std::string(buf.data(), end);
}

FieldElement parse_field_element(const FieldCtx& ctx, std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::ParseError, "bad field element '" + std::string(text) + "'");
  }
  return ctx.element(value);
}

}  // namespace gr4sd
