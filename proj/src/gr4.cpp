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

#include "gr4sd/gr4.hpp"

#include "gr4sd/error.hpp"

namespace gr4sd {

namespace {

std::uint32_t reduce_mod2(const std::vector<std::uint8_t>& modulus4) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < modulus4.size(); ++i) bits |= std::uint32_t(modulus4[i] & 1u) << i;
  return bits;
}

void check_shape(int m, const std::vector<std::uint8_t>& modulus4) {
  if (static_cast<int>(modulus4.size()) != m + 1 || modulus4.back() != 1) {
    throw Error(Errc::DegreeMismatch, "ring modulus must be monic of degree " + std::to_string(m));
  }
  for (auto c : modulus4) {
    if (c > 3) throw Error(Errc::RangeError, "ring modulus coefficients must lie in Z_4");
  }
}

}  // namespace

RingCtx::RingCtx(FieldCtx field, std::vector<std::uint8_t> modulus4)
    : field_(field), modulus4_(std::move(modulus4)) {
  if (degree() > kTableDegree) return;
  const std::uint32_t n = static_cast<std::uint32_t>(size());
  auto table = std::make_shared<std::vector<std::uint16_t>>(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      (*table)[std::size_t{a} * n + b] = static_cast<std::uint16_t>(pack(mul_slow(unpack(a), unpack(b))));
    }
  }
  table_ = std::move(table);
}

RingCtx RingCtx::make(const FieldCtx& field, std::vector<std::uint8_t> modulus4) {
  check_shape(field.degree(), modulus4);
  if (reduce_mod2(modulus4) != field.modulus()) {
    throw Error(Errc::NotBasicIrreducible, "reduction of the ring modulus differs from the field modulus");
  }
  return RingCtx(field, std::move(modulus4));
}

RingCtx RingCtx::make(int m, std::vector<std::uint8_t> modulus4) {
  check_shape(m, modulus4);
  const std::uint32_t bar_modulus = reduce_mod2(modulus4);
  if (!gf2_is_irreducible(bar_modulus)) {
    throw Error(Errc::NotBasicIrreducible, "reduction of the ring modulus is reducible over Z_2");
  }
  return RingCtx(FieldCtx::make(m, bar_modulus), std::move(modulus4));
}

RingCtx RingCtx::lift(const FieldCtx& field) {
  std::vector<std::uint8_t> modulus4(static_cast<std::size_t>(field.degree()) + 1);
  for (std::size_t i = 0; i < modulus4.size(); ++i) modulus4[i] = (field.modulus() >> i) & 1u;
  return RingCtx(field, std::move(modulus4));
}

RingElement RingCtx::from_int(int value) const noexcept {
  const int r = ((value % 4) + 4) % 4;
  return {{static_cast<std::uint32_t>(r & 1)}, {static_cast<std::uint32_t>(r >> 1)}};
}

RingElement RingCtx::mul(Element a, Element b) const noexcept {
  if (table_) return unpack((*table_)[std::size_t{pack(a)} * size() + pack(b)]);
  return mul_slow(a, b);
}

// Full Z_4[z] product reduced by the monic modulus, then re-split into digits.
RingElement RingCtx::mul_slow(Element a, Element b) const noexcept {
  const int m = degree();
  std::vector<int> prod(static_cast<std::size_t>(2 * m - 1), 0);
  for (int i = 0; i < m; ++i) {
    const int ai = int((a.beta0.bits >> i) & 1u) + 2 * int((a.beta1.bits >> i) & 1u);
    if (ai == 0) continue;
    for (int j = 0; j < m; ++j) {
      const int bj = int((b.beta0.bits >> j) & 1u) + 2 * int((b.beta1.bits >> j) & 1u);
      prod[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  for (int d = 2 * m - 2; d >= m; --d) {
    const int lead = prod[static_cast<std::size_t>(d)] % 4;
    prod[static_cast<std::size_t>(d)] = 0;
    if (lead == 0) continue;
    for (int i = 0; i < m; ++i) {
      prod[static_cast<std::size_t>(d - m + i)] += 4 * 4 - lead * modulus4_[static_cast<std::size_t>(i)];
    }
  }
  Element out;
  for (int i = 0; i < m; ++i) {
    const int c = prod[static_cast<std::size_t>(i)] % 4;
    out.beta0.bits |= std::uint32_t(c & 1) << i;
    out.beta1.bits |= std::uint32_t(c >> 1) << i;
  }
  return out;
}

RingElement RingCtx::inv(Element a) const {
  if (!is_unit(a)) throw Error(Errc::DivisionByZero, "inverse of a non-unit");
  // a * embed(bar(a)^-1) = 1 + 2d, and (1 + 2d)^-1 = 1 + 2d.
  const Element approx = embed(field_.inv(a.beta0));
  const Element residue = mul(a, approx);
  return mul(approx, {field_.one(), residue.beta1});
}

RingCtx ring_make(const FieldCtx& field, std::vector<std::uint8_t> modulus4) {
  return RingCtx::make(field, std::move(modulus4));
}

RingElement ring_mul(const RingCtx& ctx, RingElement a, RingElement b) { return ctx.mul(a, b); }

FieldElement bar(const RingCtx&, RingElement a) { return a.beta0; }

std::pair<FieldElement, FieldElement> two_adic(const RingCtx&, RingElement a) { return {a.beta0, a.beta1}; }

RingElement from_two_adic(const RingCtx& ctx, FieldElement beta0, FieldElement beta1) {
  return {ctx.field().element(beta0.bits), ctx.field().element(beta1.bits)};
}

std::vector<std::uint8_t> z4_coefficients(const RingCtx& ctx, RingElement a) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(ctx.degree()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(((a.beta0.bits >> i) & 1u) + 2 * ((a.beta1.bits >> i) & 1u));
  }
  return out;
}

RingElement from_z4_coefficients(const RingCtx& ctx, std::span<const std::uint8_t> coeffs) {
  if (static_cast<int>(coeffs.size()) != ctx.degree()) {
    throw Error(Errc::DegreeMismatch, "expected " + std::to_string(ctx.degree()) + " Z_4 coefficients");
  }
  RingElement out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const unsigned c = coeffs[i] % 4u;
    out.beta0.bits |= (c & 1u) << i;
    out.beta1.bits |= (c >> 1) << i;
  }
  return out;
}

std::string to_string(const RingElement& a) { return to_hex(a.beta0) + "+2*" + to_hex(a.beta1); }

RingElement parse_ring_element(const RingCtx& ctx, std::string_view text) {
  const auto plus = text.find("+2*");
  if (plus == std::string_view::npos) return ctx.embed(parse_field_element(ctx.field(), text));
  return {parse_field_element(ctx.field(), text.substr(0, plus)),
          parse_field_element(ctx.field(), text.substr(plus + 3))};
}

}  // namespace gr4sd
