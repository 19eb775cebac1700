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

// GF(2) matrices built from Kronecker powers of [[1,0],[1,1]].
//
// Labeling follows the construction this library implements: rows of M_l are
// numbered 0..l-1 and columns 1..l. BinMatrix itself is plainly 0-indexed;
// the labeled accessors (entry, column) do the translation.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gr4sd/gf2m.hpp"

namespace gr4sd {

/// Dense GF(2) matrix stored as packed 64-bit rows.
class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(int rows, int cols);

  static BinMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  bool operator()(int r, int c) const noexcept {
    return (data_[index(r, c)] >> (c & 63)) & 1u;
  }
  void set(int r, int c, bool v) noexcept {
    auto& w = data_[index(r, c)];
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    w = v ? (w | bit) : (w & ~bit);
  }

  /// Row i (0-based), column j (1-based).
  bool entry(int i, int j) const;

  std::span<const std::uint64_t> row_words(int r) const noexcept {
    return {data_.data() + static_cast<std::size_t>(r) * words_, words_};
  }

  bool is_zero() const noexcept;
  BinMatrix top_left(int l) const;

  friend BinMatrix operator*(const BinMatrix& a, const BinMatrix& b);
  friend BinMatrix operator+(const BinMatrix& a, const BinMatrix& b);
  friend bool operator==(const BinMatrix& a, const BinMatrix& b) = default;

  /// Rows as strings of '0'/'1'.
  std::string to_string() const;

 private:
  std::size_t index(int r, int c) const noexcept {
    return static_cast<std::size_t>(r) * words_ + static_cast<std::size_t>(c >> 6);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

BinMatrix kronecker(const BinMatrix& a, const BinMatrix& b);

/// G_{2^lambda} = G_2 (x) G_{2^{lambda-1}}, G_2 = [[1,0],[1,1]].
BinMatrix build_G(int lambda);
/// Top-left l x l block of I + G_{2^lambda} for the least lambda with l <= 2^lambda.
BinMatrix build_M(int l);

/// binomial(n - j, i - j) mod 2 with 1-based i, j and n a power of two.
bool entry_g(std::int64_t i, std::int64_t j, std::int64_t n);

/// Entries g_{lo,j}, ..., g_{hi-1,j} of column j of M_hi.
struct ColumnVector {
  int lo = 0;
  int hi = 0;
  std::vector<std::uint8_t> bits;

  /// Entry at absolute row index r, lo <= r < hi.
  bool at(int r) const { return bits.at(static_cast<std::size_t>(r - lo)) != 0; }
  friend bool operator==(const ColumnVector&, const ColumnVector&) = default;
};

/// Full column j (1-based) of M_l.
ColumnVector column(int j, int l);
/// Drops rows below delta; lo <= delta < hi.
ColumnVector truncate_column(const ColumnVector& c, int delta);

/// Columns 1, 3, ..., l-2 of M_l followed by the last unit vector (l odd).
std::vector<ColumnVector> solution_basis(int l);

/// Row-echelon rank over GF(2).
int rank_gf2(BinMatrix m);

/// M * v for a vector over GF(2^m) (addition is XOR).
std::vector<FieldElement> apply(const BinMatrix& m, std::span<const FieldElement> v);

}  // namespace gr4sd
