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

#include "gr4sd/codegen.hpp"

#include <utility>

#include "gr4sd/error.hpp"

namespace gr4sd {

namespace {

void check_k(int k) {
  if (k < 1 || k > kMaxK) throw Error(Errc::RangeError, "k must be in 1.." + std::to_string(kMaxK));
}

void check_params(std::span<const FieldElement> params, std::size_t expected) {
  if (params.size() != expected) {
    throw Error(Errc::BadParamLength,
                "expected " + std::to_string(expected) + " parameters, got " + std::to_string(params.size()));
  }
}

// binomial(n, r) mod 2 by Lucas' theorem.
bool binomial_is_odd(std::uint64_t n, std::uint64_t r) { return r <= n && (r & ~n) == 0; }

// Accumulates a * column over rows [column.lo, column.hi) into out[row - column.lo].
void accumulate(std::vector<FieldElement>& out, FieldElement a, const ColumnVector& column) {
  for (int r = column.lo; r < column.hi; ++r) {
    if (column.at(r)) out[static_cast<std::size_t>(r - column.lo)].bits ^= a.bits;
  }
}

}  // namespace

std::string_view to_string(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::Trivial: return "TRIVIAL";
    case CaseTag::CaseII: return "CASE_II";
    case CaseTag::CaseIII: return "CASE_III";
    case CaseTag::K2Family: return "K2_FAMILY";
  }
  return "?";
}

CaseTag parse_case_tag(std::string_view text) {
  for (auto tag : {CaseTag::Trivial, CaseTag::CaseII, CaseTag::CaseIII, CaseTag::K2Family}) {
    if (text == to_string(tag)) return tag;
  }
  throw Error(Errc::ParseError, "unknown case tag '" + std::string(text) + "'");
}

BigInt count(int k, int m) {
  check_k(k);
  if (m < 1) throw Error(Errc::RangeError, "m must be positive");
  if (k == 1) return 1;
  const BigInt q = pow2(static_cast<unsigned>(m));
  if (k == 2) return 1 + q;
  const unsigned n = (1u << (k - 2)) - 1;
  const BigInt numerator = boost::multiprecision::pow(q, n) - 1;
  const BigInt denominator = q - 1;
  if (numerator % denominator != 0) throw Error(Errc::RangeError, "geometric sum is not integral");
  return 1 + q + 2 * q * q * (numerator / denominator);
}

int max_s(int k) {
  check_k(k);
  return (1 << (k - 1)) - 1;
}

CaseTag case_for(int k, int s) {
  if (s < 0 || s > max_s(k)) throw Error(Errc::RangeError, "s=" + std::to_string(s) + " outside 0.." + std::to_string(max_s(k)));
  if (s == 0) return CaseTag::Trivial;
  if (k == 2) return CaseTag::K2Family;
  return s % 2 == 1 ? CaseTag::CaseII : CaseTag::CaseIII;
}

int param_length(int s) { return s / 2 + 1; }

std::vector<int> param_names(int s) {
  if (s <= 1) return {0};
  std::vector<int> names;
  for (int i = (s + 1) / 2; i <= s - 1; ++i) names.push_back(2 * i - 1);
  names.push_back(2 * s - 2);
  return names;
}

int rho_exponent(int k, int s) {
  if (k < 3) throw Error(Errc::RangeError, "rho is only used for k >= 3");
  return (1 << (k - 1)) - s - 1;
}

FieldXM1 build_b_case2(const FieldCtx& field, int k, int nu, std::span<const FieldElement> params) {
  check_k(k);
  const int nu_max = k >= 2 ? (1 << (k - 2)) - 1 : -1;
  if (nu < 0 || nu > nu_max) throw Error(Errc::RangeError, "nu outside 0.." + std::to_string(nu_max));
  check_params(params, static_cast<std::size_t>(nu) + 1);
  if (nu == 0) return FieldXM1::from_prefix(field, k, params.first(1));

  // (b_{2nu+1}, ..., b_{4nu}) from rows [2nu+1, 4nu+1) of M_{4nu+1}.
  const int l = 4 * nu + 1;
  const int delta = 2 * nu + 1;
  std::vector<FieldElement> tail(static_cast<std::size_t>(l - delta));
  for (int i = nu + 1; i <= 2 * nu; ++i) {
    accumulate(tail, params[static_cast<std::size_t>(i - nu - 1)], truncate_column(column(2 * i - 1, l), delta));
  }
  tail.back().bits ^= params.back().bits;

  // Exponent of b_j is j - 2nu, so the constant term is zero.
  std::vector<FieldElement> comps(static_cast<std::size_t>(delta));
  for (std::size_t t = 0; t < tail.size(); ++t) comps[t + 1] = tail[t];
  return FieldXM1::from_prefix(field, k, comps);
}

FieldXM1 build_b_case3(const FieldCtx& field, int k, int nu, std::span<const FieldElement> params) {
  check_k(k);
  const int nu_max = k >= 3 ? (1 << (k - 2)) - 1 : 0;
  if (nu < 1 || nu > nu_max) throw Error(Errc::RangeError, "nu outside 1.." + std::to_string(nu_max));
  check_params(params, static_cast<std::size_t>(nu) + 1);

  // (b_{2nu-1}, ..., b_{4nu-2}) from rows [2nu-1, 4nu-1) of M_{4nu-1}.
  const int l = 4 * nu - 1;
  const int delta = 2 * nu - 1;
  std::vector<FieldElement> comps(static_cast<std::size_t>(l - delta));
  for (int i = nu; i <= 2 * nu - 1; ++i) {
    accumulate(comps, params[static_cast<std::size_t>(i - nu)], truncate_column(column(2 * i - 1, l), delta));
  }
  comps.back().bits ^= params.back().bits;
  return FieldXM1::from_prefix(field, k, comps);
}

FieldXM1 build_b_closed_form(const FieldCtx& field, int k, int s, std::span<const FieldElement> params) {
  check_k(k);
  if (s < 2 || s > max_s(k)) throw Error(Errc::RangeError, "s outside 2.." + std::to_string(max_s(k)));
  check_params(params, static_cast<std::size_t>(param_length(s)));

  const std::uint64_t n = std::uint64_t{1} << k;
  std::vector<FieldElement> comps(static_cast<std::size_t>(s));
  const int first = (s + 1) / 2;
  for (int i = first; i <= s - 1; ++i) {
    const FieldElement a = params[static_cast<std::size_t>(i - first)];
    for (int t = 1; t <= 2 * (s - i); ++t) {
      if (binomial_is_odd(n - 2 * static_cast<std::uint64_t>(i) + 1, static_cast<std::uint64_t>(t))) {
        comps[static_cast<std::size_t>(2 * i - 1 - s + t)].bits ^= a.bits;
      }
    }
  }
  comps[static_cast<std::size_t>(s - 1)].bits ^= params.back().bits;
  return FieldXM1::from_prefix(field, k, comps);
}

BinMatrix param_matrix(int k, int s) {
  if (s < 1 || s > max_s(k)) throw Error(Errc::RangeError, "s outside 1.." + std::to_string(max_s(k)));
  const int len = param_length(s);
  BinMatrix out(s, len);
  if (s == 1) {
    out.set(0, 0, true);
    return out;
  }
  const FieldCtx f2 = FieldCtx::standard(1);
  for (int c = 0; c < len; ++c) {
    std::vector<FieldElement> unit(static_cast<std::size_t>(len));
    unit[static_cast<std::size_t>(c)] = f2.one();
    const FieldXM1 b = s % 2 == 1 ? build_b_case2(f2, k, (s - 1) / 2, unit) : build_b_case3(f2, k, s / 2, unit);
    for (int r = 0; r < s; ++r) out.set(r, c, !b.comps[static_cast<std::size_t>(r)].is_zero());
  }
  return out;
}

std::string render_b_expression(int k, int s) {
  if (s == 1) return "b";
  const BinMatrix matrix = param_matrix(k, s);
  const std::vector<int> names = param_names(s);
  std::string out;
  for (int j = 0; j < s; ++j) {
    std::vector<int> terms;
    for (int c = 0; c < matrix.cols(); ++c) {
      if (matrix(j, c)) terms.push_back(names[static_cast<std::size_t>(c)]);
    }
    if (terms.empty()) continue;
    if (!out.empty()) out += '+';
    if (terms.size() > 1) out += '(';
    for (std::size_t t = 0; t < terms.size(); ++t) {
      if (t > 0) out += '+';
      out += "a_" + std::to_string(terms[t]);
    }
    if (terms.size() > 1) out += ')';
    if (j == 1) out += "(x-1)";
    if (j > 1) out += "(x-1)^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

FieldXM1 two_part_xm1(const CodeSpec& spec, const FieldCtx& field) {
  FieldXM1 out = FieldXM1::from_prefix(field, spec.k, spec.bvec);
  if (spec.tag == CaseTag::CaseII || spec.tag == CaseTag::CaseIII) {
    auto& c = out.comps[static_cast<std::size_t>(rho_exponent(spec.k, spec.s))];
    c = field.add(c, field.one());
  }
  return out;
}

GeneratorPair realize(const CodeSpec& spec, const RingCtx& ring) {
  const int k = spec.k;
  if (spec.tag == CaseTag::Trivial) {
    return {std::nullopt, RingPoly::constant(ring, k, ring.two())};
  }
  if (spec.tag != case_for(k, spec.s)) throw Error(Errc::RangeError, "case tag does not match s");
  check_params(spec.bvec, static_cast<std::size_t>(spec.s));
  const std::uint64_t n = std::uint64_t{1} << k;
  RingPoly f = xm1_pow(ring, k, n - static_cast<std::uint64_t>(spec.s)) +
               twice(ring, from_xm1(two_part_xm1(spec, ring.field())));
  RingPoly g2 = xm1_pow(ring, k, static_cast<std::uint64_t>(spec.s)).scaled(ring.two());
  return {std::move(f), std::move(g2)};
}

CodeEnumerator::CodeEnumerator(int k, FieldCtx field, std::optional<int> s_filter) : k_(k), field_(field) {
  const int top = max_s(k);
  const int lo = s_filter ? *s_filter : 0;
  const int hi = s_filter ? *s_filter : top;
  if (lo < 0 || hi > top) throw Error(Errc::RangeError, "s outside 0.." + std::to_string(top));
  const BigInt q = pow2(static_cast<unsigned>(field_.degree()));
  for (int s = lo; s <= hi; ++s) {
    if (s == 0) {
      blocks_.push_back({0, 1, BinMatrix{}});
    } else {
      blocks_.push_back({s, boost::multiprecision::pow(q, static_cast<unsigned>(param_length(s))), param_matrix(k, s)});
    }
    total_ += blocks_.back().size;
  }
  seek(0);
}

CodeSpec CodeEnumerator::make(const Block& block, std::span<const std::uint32_t> digits) const {
  CodeSpec spec;
  spec.k = k_;
  spec.s = block.s;
  spec.tag = case_for(k_, block.s);
  if (block.s == 0) return spec;
  spec.params.reserve(digits.size());
  for (auto d : digits) spec.params.push_back({d});
  spec.bvec = gr4sd::apply(block.matrix, spec.params);
  return spec;
}

CodeSpec CodeEnumerator::at(std::uint64_t index) const {
  BigInt rest = index;
  for (const auto& block : blocks_) {
    if (rest >= block.size) {
      rest -= block.size;
      continue;
    }
    const auto local = static_cast<std::uint64_t>(rest);
    const int len = block.s == 0 ? 0 : param_length(block.s);
    const int m = field_.degree();
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) {
      const int shift = m * (len - 1 - t);
      digits[static_cast<std::size_t>(t)] = shift >= 64 ? 0 : static_cast<std::uint32_t>((local >> shift) & field_.mask());
    }
    return make(block, digits);
  }
  throw Error(Errc::IndexOutOfRange, "code index " + std::to_string(index) + " beyond " + total_.str());
}

void CodeEnumerator::seek(std::uint64_t index) {
  done_ = BigInt(index) >= total_;
  started_ = false;
  if (done_) return;
  const CodeSpec spec = at(index);
  block_ = 0;
  while (blocks_[block_].s != spec.s) ++block_;
  digits_.clear();
  for (auto p : spec.params) digits_.push_back(p.bits);
}

std::optional<CodeSpec> CodeEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return make(blocks_[block_], digits_);
  }
  // Odometer step, last digit fastest.
  std::size_t t = digits_.size();
  while (t > 0) {
    --t;
    if (++digits_[t] < field_.order()) return make(blocks_[block_], digits_);
    digits_[t] = 0;
  }
  if (++block_ == blocks_.size()) {
    done_ = true;
    return std::nullopt;
  }
  digits_.assign(static_cast<std::size_t>(blocks_[block_].s == 0 ? 0 : param_length(blocks_[block_].s)), 0);
  return make(blocks_[block_], digits_);
}

std::vector<CodeSpec> enumerate(int k, const RingCtx& ring) {
  CodeEnumerator it(k, ring.field());
  if (it.size() > 50'000'000) throw Error(Errc::TooLarge, "refusing to materialize " + it.size().str() + " codes");
  std::vector<CodeSpec> out;
  out.reserve(static_cast<std::size_t>(it.size()));
  while (auto spec = it.next()) out.push_back(std::move(*spec));
  return out;
}

}  // namespace gr4sd
