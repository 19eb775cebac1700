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

#include "gr4sd/kronmat.hpp"

#include <algorithm>
#include <utility>

#include "gr4sd/error.hpp"

namespace gr4sd {

BinMatrix::BinMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_(static_cast<std::size_t>((cols + 63) / 64)) {
  if (rows < 0 || cols < 0) throw Error(Errc::RangeError, "negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * words_, 0);
}

BinMatrix BinMatrix::identity(int n) {
  BinMatrix out(n, n);
  for (int i = 0; i < n; ++i) out.set(i, i, true);
  return out;
}

bool BinMatrix::entry(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 1 || j > cols_) {
    throw Error(Errc::IndexOutOfRange, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return (*this)(i, j - 1);
}

bool BinMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

BinMatrix BinMatrix::top_left(int l) const {
  if (l < 0 || l > rows_ || l > cols_) throw Error(Errc::IndexOutOfRange, "block larger than matrix");
  BinMatrix out(l, l);
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < l; ++c) out.set(r, c, (*this)(r, c));
  }
  return out;
}

BinMatrix operator*(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::RangeError, "matrix shapes do not chain");
  BinMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    auto* dst = out.data_.data() + static_cast<std::size_t>(r) * out.words_;
    for (int t = 0; t < a.cols_; ++t) {
      if (!a(r, t)) continue;
      const auto src = b.row_words(t);
      for (std::size_t w = 0; w < out.words_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

BinMatrix operator+(const BinMatrix& a, const BinMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::RangeError, "matrix shapes differ");
  BinMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] ^= b.data_[i];
  return out;
}

std::string BinMatrix::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_ + 1));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.push_back((*this)(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BinMatrix kronecker(const BinMatrix& a, const BinMatrix& b) {
  BinMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!a(i, j)) continue;
      for (int p = 0; p < b.rows(); ++p) {
        for (int q = 0; q < b.cols(); ++q) {
          if (b(p, q)) out.set(i * b.rows() + p, j * b.cols() + q, true);
        }
      }
    }
  }
  return out;
}

BinMatrix build_G(int lambda) {
  if (lambda < 1 || lambda > 12) throw Error(Errc::RangeError, "lambda must be in 1..12");
  BinMatrix g2(2, 2);
  g2.set(0, 0, true);
  g2.set(1, 0, true);
  g2.set(1, 1, true);
  BinMatrix g = g2;
  for (int i = 2; i <= lambda; ++i) g = kronecker(g2, g);
  return g;
}

BinMatrix build_M(int l) {
  if (l < 1) throw Error(Errc::RangeError, "l must be positive");
  int lambda = 1;
  while ((1 << lambda) < l) ++lambda;
  const int n = 1 << lambda;
  return (BinMatrix::identity(n) + build_G(lambda)).top_left(l);
}

bool entry_g(std::int64_t i, std::int64_t j, std::int64_t n) {
  if (n < 1 || (n & (n - 1)) != 0) throw Error(Errc::RangeError, "n must be a power of two");
  if (i < 1 || i > n || j < 1 || j > n) throw Error(Errc::IndexOutOfRange, "entry index outside 1..n");
  if (i < j) return false;
  // Lucas: binomial(a, b) is odd iff b has no bit outside a.
  return ((i - j) & ~(n - j)) == 0;
}

ColumnVector column(int j, int l) {
  if (l < 1 || j < 1 || j > l) throw Error(Errc::IndexOutOfRange, "column index outside 1..l");
  const BinMatrix m = build_M(l);
  ColumnVector out{0, l, std::vector<std::uint8_t>(static_cast<std::size_t>(l))};
  for (int r = 0; r < l; ++r) out.bits[static_cast<std::size_t>(r)] = m.entry(r, j) ? 1 : 0;
  return out;
}

ColumnVector truncate_column(const ColumnVector& c, int delta) {
  if (delta < c.lo || delta >= c.hi) throw Error(Errc::IndexOutOfRange, "truncation point outside the column");
  ColumnVector out{delta, c.hi, {}};
  out.bits.assign(c.bits.begin() + (delta - c.lo), c.bits.end());
  return out;
}

std::vector<ColumnVector> solution_basis(int l) {
  if (l < 1) throw Error(Errc::RangeError, "l must be positive");
  if (l % 2 == 0) throw Error(Errc::EvenLength, "solution basis needs odd l");
  std::vector<ColumnVector> out;
  for (int j = 1; j <= l - 2; j += 2) out.push_back(column(j, l));
  ColumnVector last{0, l, std::vector<std::uint8_t>(static_cast<std::size_t>(l))};
  last.bits.back() = 1;
  out.push_back(std::move(last));
  return out;
}

int rank_gf2(BinMatrix m) {
  int rank = 0;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    const auto w = m.row_words(r);
    rows.emplace_back(w.begin(), w.end());
  }
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    const std::size_t word = static_cast<std::size_t>(c >> 6);
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& row) { return (row[word] & bit) != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if ((rows[r][word] & bit) == 0) continue;
      for (std::size_t w = 0; w < p.size(); ++w) rows[r][w] ^= p[w];
    }
    ++rank;
  }
  return rank;
}

std::vector<FieldElement> apply(const BinMatrix& m, std::span<const FieldElement> v) {
  if (static_cast<int>(v.size()) != m.cols()) throw Error(Errc::RangeError, "vector length differs from matrix width");
  std::vector<FieldElement> out(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    std::uint32_t acc = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (m(r, c)) acc ^= v[static_cast<std::size_t>(c)].bits;
    }
    out[static_cast<std::size_t>(r)] = {acc};
  }
  return out;
}

}  // namespace gr4sd
