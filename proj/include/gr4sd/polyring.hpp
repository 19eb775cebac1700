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

// Arithmetic in S[x]/(x^{2^k} - 1) for S = GF(2^m) or GR(4,m), plus the
// (x-1)-power basis and the conjugation x -> x^{-1}.
//
// Everything is templated on the scalar context (FieldCtx or RingCtx); a
// context must provide Element, zero(), one(), add(), sub(), neg(), mul() and
// operator==.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gr4sd/error.hpp"
#include "gr4sd/gf2m.hpp"
#include "gr4sd/gr4.hpp"

namespace gr4sd {

inline constexpr int kMaxK = 20;

inline std::size_t cyclic_length(int k) {
  if (k < 1 || k > kMaxK) throw Error(Errc::RangeError, "k must be in 1.." + std::to_string(kMaxK));
  return std::size_t{1} << k;
}

/// An element of S[x]/(x^{2^k} - 1); coefficient of x^i at position i.
template <class Ctx>
class CyclicPoly {
 public:
  using Scalar = typename Ctx::Element;

  CyclicPoly(Ctx ctx, int k) : ctx_(std::move(ctx)), k_(k), coeffs_(cyclic_length(k), ctx_.zero()) {}

  CyclicPoly(Ctx ctx, int k, std::vector<Scalar> coeffs)
      : ctx_(std::move(ctx)), k_(k), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != cyclic_length(k)) {
      throw Error(Errc::IndexOutOfRange, "expected " + std::to_string(cyclic_length(k)) + " coefficients");
    }
  }

  static CyclicPoly constant(Ctx ctx, int k, Scalar c) {
    CyclicPoly p(std::move(ctx), k);
    p.coeffs_[0] = c;
    return p;
  }
  static CyclicPoly one(Ctx ctx, int k) {
    auto c = ctx.one();
    return constant(std::move(ctx), k, c);
  }
  /// x^e, reduced modulo x^{2^k} - 1.
  static CyclicPoly monomial(Ctx ctx, int k, std::uint64_t e) {
    CyclicPoly p(std::move(ctx), k);
    p.coeffs_[e & (p.length() - 1)] = p.ctx_.one();
    return p;
  }

  const Ctx& ctx() const noexcept { return ctx_; }
  int k() const noexcept { return k_; }
  std::size_t length() const noexcept { return coeffs_.size(); }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const noexcept {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const CyclicPoly& a, const CyclicPoly& b) {
    return a.k_ == b.k_ && a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }

  CyclicPoly& operator+=(const CyclicPoly& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < length(); ++i) coeffs_[i] = ctx_.add(coeffs_[i], rhs.coeffs_[i]);
    return *this;
  }
  CyclicPoly& operator-=(const CyclicPoly& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < length(); ++i) coeffs_[i] = ctx_.sub(coeffs_[i], rhs.coeffs_[i]);
    return *this;
  }
  friend CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b) { return a += b; }
  friend CyclicPoly operator-(CyclicPoly a, const CyclicPoly& b) { return a -= b; }
  friend CyclicPoly operator-(CyclicPoly a) {
    for (auto& c : a.coeffs_) c = a.ctx_.neg(c);
    return a;
  }

  /// Cyclic convolution.
  friend CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b) {
    a.check_compatible(b);
    CyclicPoly out(a.ctx_, a.k_);
    const std::size_t mask = a.length() - 1;
    for (std::size_t i = 0; i < a.length(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.length(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        auto& slot = out.coeffs_[(i + j) & mask];
        slot = a.ctx_.add(slot, a.ctx_.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return out;
  }

  CyclicPoly scaled(const Scalar& c) const {
    CyclicPoly out = *this;
    for (auto& v : out.coeffs_) v = ctx_.mul(c, v);
    return out;
  }

  /// x^e * this, i.e. a cyclic shift of the coefficient vector.
  CyclicPoly shifted(std::uint64_t e) const {
    CyclicPoly out(ctx_, k_);
    const std::size_t mask = length() - 1;
    for (std::size_t i = 0; i < length(); ++i) out.coeffs_[(i + e) & mask] = coeffs_[i];
    return out;
  }

  /// this * (x - 1).
  CyclicPoly times_xm1() const { return shifted(1) - *this; }

  void check_compatible(const CyclicPoly& rhs) const {
    if (k_ != rhs.k_ || !(ctx_ == rhs.ctx_)) throw Error(Errc::ContextMismatch, "polynomials live in different rings");
  }

 private:
  Ctx ctx_;
  int k_;
  std::vector<Scalar> coeffs_;
};

/// Coordinates in the basis {(x-1)^j : 0 <= j < 2^k}.
template <class Ctx>
struct XM1Vector {
  using Scalar = typename Ctx::Element;

  Ctx ctx;
  int k;
  std::vector<Scalar> comps;

  XM1Vector(Ctx c, int k_, std::vector<Scalar> v) : ctx(std::move(c)), k(k_), comps(std::move(v)) {
    if (comps.size() != cyclic_length(k)) {
      throw Error(Errc::IndexOutOfRange, "expected " + std::to_string(cyclic_length(k)) + " components");
    }
  }
  XM1Vector(Ctx c, int k_) : XM1Vector(c, k_, std::vector<Scalar>(cyclic_length(k_), c.zero())) {}

  /// Zero-pads a short prefix of components.
  static XM1Vector from_prefix(Ctx c, int k_, std::span<const Scalar> prefix) {
    XM1Vector v(c, k_);
    if (prefix.size() > v.comps.size()) throw Error(Errc::IndexOutOfRange, "too many (x-1)-components");
    for (std::size_t j = 0; j < prefix.size(); ++j) v.comps[j] = prefix[j];
    return v;
  }

  friend bool operator==(const XM1Vector& a, const XM1Vector& b) {
    return a.k == b.k && a.ctx == b.ctx && a.comps == b.comps;
  }
};

using FieldPoly = CyclicPoly<FieldCtx>;
using RingPoly = CyclicPoly<RingCtx>;
using FieldXM1 = XM1Vector<FieldCtx>;
using RingXM1 = XM1Vector<RingCtx>;

template <class Ctx>
CyclicPoly<Ctx> poly_mul(const CyclicPoly<Ctx>& a, const CyclicPoly<Ctx>& b) {
  return a * b;
}

/// (x-1)^j fully reduced; j may exceed 2^k.
template <class Ctx>
CyclicPoly<Ctx> xm1_pow(const Ctx& ctx, int k, std::uint64_t j) {
  auto result = CyclicPoly<Ctx>::one(ctx, k);
  for (std::uint64_t i = 0; i < j; ++i) result = result.times_xm1();
  return result;
}

/// a(x) -> a(x^{-1}): coefficient i moves to (2^k - i) mod 2^k.
template <class Ctx>
CyclicPoly<Ctx> chi(const CyclicPoly<Ctx>& a) {
  CyclicPoly<Ctx> out(a.ctx(), a.k());
  const std::size_t n = a.length();
  for (std::size_t i = 0; i < n; ++i) out[(n - i) & (n - 1)] = a[i];
  return out;
}

/// Repeated synthetic division of the degree < 2^k representative by (x-1).
template <class Ctx>
XM1Vector<Ctx> to_xm1(const CyclicPoly<Ctx>& a) {
  const auto& ctx = a.ctx();
  std::vector<typename Ctx::Element> work(a.coeffs().begin(), a.coeffs().end());
  XM1Vector<Ctx> out(ctx, a.k());
  for (std::size_t j = 0; j < out.comps.size(); ++j) {
    // Divide work (degree < n - j) by (x - 1); the quotient q_i lands in
    // work[i] and the remainder work(1) falls out of the carry.
    const std::size_t deg_bound = work.size() - j;
    auto carry = ctx.zero();
    for (std::size_t i = deg_bound; i-- > 0;) {
      const auto next = ctx.add(work[i], carry);
      work[i] = carry;
      carry = next;
    }
    out.comps[j] = carry;
  }
  return out;
}

/// Horner evaluation of sum_j v_j (x-1)^j; the degree never reaches 2^k.
template <class Ctx>
CyclicPoly<Ctx> from_xm1(const XM1Vector<Ctx>& v) {
  const auto& ctx = v.ctx;
  const std::size_t n = v.comps.size();
  std::vector<typename Ctx::Element> acc(n, ctx.zero());
  for (std::size_t j = n; j-- > 0;) {
    // acc = acc * (x - 1) + v_j; acc has degree < n - 1 - j here.
    for (std::size_t i = n - 1; i > 0; --i) acc[i] = ctx.sub(acc[i - 1], acc[i]);
    acc[0] = ctx.add(ctx.neg(acc[0]), v.comps[j]);
  }
  return CyclicPoly<Ctx>(ctx, v.k, std::move(acc));
}

/// Componentwise embedding of a GF(2^m) polynomial into GR(4,m)[x].
inline RingPoly lift(const RingCtx& ring, const FieldPoly& a) {
  if (!(ring.field() == a.ctx())) throw Error(Errc::ContextMismatch, "residue field differs from the ring's");
  RingPoly out(ring, a.k());
  for (std::size_t i = 0; i < a.length(); ++i) out[i] = ring.embed(a[i]);
  return out;
}

/// 2 * lift(a).
inline RingPoly twice(const RingCtx& ring, const FieldPoly& a) {
  if (!(ring.field() == a.ctx())) throw Error(Errc::ContextMismatch, "residue field differs from the ring's");
  RingPoly out(ring, a.k());
  for (std::size_t i = 0; i < a.length(); ++i) out[i] = ring.twice(a[i]);
  return out;
}

/// Coefficientwise reduction mod 2.
inline FieldPoly bar(const RingPoly& a) {
  FieldPoly out(a.ctx().field(), a.k());
  for (std::size_t i = 0; i < a.length(); ++i) out[i] = a[i].beta0;
  return out;
}

/// The 2-digit: a = lift(bar(a)) + 2 * lift(two_part(a)) coefficientwise.
inline FieldPoly two_part(const RingPoly& a) {
  FieldPoly out(a.ctx().field(), a.k());
  for (std::size_t i = 0; i < a.length(); ++i) out[i] = a[i].beta1;
  return out;
}

}  // namespace gr4sd
