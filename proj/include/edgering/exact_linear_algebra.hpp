// Copyright 2026 The edgering Authors.
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

// Exact integer and rational linear algebra at desk scale: fraction-free
// rank, Hermite-style lattice bases, and a rational phase-one simplex for
// cone feasibility. All arithmetic is checked; overflow raises
// ErrorKind::kLimitExceeded instead of producing a wrong answer.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgering/error.hpp"

namespace edgering {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

namespace detail {

inline std::int64_t Narrow(__int128 value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    Fail(ErrorKind::kLimitExceeded, "integer overflow in exact arithmetic");
  }
  return static_cast<std::int64_t>(value);
}

inline std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  return Narrow(static_cast<__int128>(a) * b);
}

inline std::int64_t CheckedSub(std::int64_t a, std::int64_t b) {
  return Narrow(static_cast<__int128>(a) - b);
}

}  // namespace detail

/// Rank over Q of the given integer rows (Bareiss elimination).
inline int Rank(IntMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  std::int64_t prev_pivot = 1;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::int64_t p = rows[rank][c];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::int64_t f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        __int128 num = static_cast<__int128>(p) * rows[r][k] -
                       static_cast<__int128>(f) * rows[rank][k];
        // Bareiss: exact division by the previous pivot.
        rows[r][k] = detail::Narrow(num / prev_pivot);
      }
    }
    prev_pivot = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Echelon basis of the integer lattice spanned by a set of generators, with
/// positive pivots and entries above each pivot reduced into [0, pivot).
class LatticeBasis {
 public:
  LatticeBasis() = default;

  explicit LatticeBasis(IntMatrix generators) {
    if (generators.empty()) return;
    dimension_ = generators.front().size();
    IntMatrix& m = generators;
    std::size_t row = 0;
    for (std::size_t c = 0; c < dimension_ && row < m.size(); ++c) {
      // Euclid on column c among rows >= row.
      while (true) {
        std::size_t best = m.size();
        for (std::size_t r = row; r < m.size(); ++r) {
          if (m[r][c] != 0 &&
              (best == m.size() || std::llabs(m[r][c]) < std::llabs(m[best][c]))) {
            best = r;
          }
        }
        if (best == m.size()) break;
        std::swap(m[row], m[best]);
        bool others = false;
        for (std::size_t r = row + 1; r < m.size(); ++r) {
          if (m[r][c] == 0) continue;
          const std::int64_t q = m[r][c] / m[row][c];
          for (std::size_t k = c; k < dimension_; ++k) {
            m[r][k] = detail::CheckedSub(m[r][k], detail::CheckedMul(q, m[row][k]));
          }
          if (m[r][c] != 0) others = true;
        }
        if (!others) break;
      }
      if (m[row][c] == 0) continue;
      if (m[row][c] < 0) {
        for (auto& x : m[row]) x = -x;
      }
      pivots_.push_back(c);
      ++row;
    }
    m.resize(row);
    // Reduce above-pivot entries for a canonical form.
    for (std::size_t i = 0; i < row; ++i) {
      const std::size_t c = pivots_[i];
      for (std::size_t r = 0; r < i; ++r) {
        std::int64_t q = m[r][c] / m[i][c];
        if (m[r][c] - q * m[i][c] < 0) --q;
        if (q == 0) continue;
        for (std::size_t k = c; k < dimension_; ++k) {
          m[r][k] = detail::CheckedSub(m[r][k], detail::CheckedMul(q, m[i][k]));
        }
      }
    }
    rows_ = std::move(m);
  }

  const IntMatrix& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Whether `x` is an integer combination of the generators.
  bool Contains(std::span<const std::int64_t> x) const {
    if (x.size() != dimension_) return false;
    std::vector<std::int64_t> rest(x.begin(), x.end());
    std::size_t next_col = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      for (; next_col < p; ++next_col) {
        if (rest[next_col] != 0) return false;
      }
      if (rest[p] % rows_[i][p] != 0) return false;
      const std::int64_t q = rest[p] / rows_[i][p];
      for (std::size_t k = p; k < dimension_; ++k) {
        rest[k] = detail::CheckedSub(rest[k], detail::CheckedMul(q, rows_[i][k]));
      }
      next_col = p + 1;
    }
    for (; next_col < dimension_; ++next_col) {
      if (rest[next_col] != 0) return false;
    }
    return true;
  }

 private:
  std::size_t dimension_ = 0;
  IntMatrix rows_;
  std::vector<std::size_t> pivots_;
};

/// A normalized fraction with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  Rational(std::int64_t n, std::int64_t d) { Assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Make(static_cast<__int128>(a.num_) * b.den_ +
                    static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Make(static_cast<__int128>(a.num_) * b.den_ -
                    static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Make(static_cast<__int128>(a.num_) * b.num_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) Fail(ErrorKind::kInvalidInput, "division by zero");
    return Make(static_cast<__int128>(a.num_) * b.den_,
                static_cast<__int128>(a.den_) * b.num_);
  }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  static __int128 Gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static Rational Make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = Gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = detail::Narrow(n);
    r.den_ = detail::Narrow(d);
    if (r.num_ == 0) r.den_ = 1;
    return r;
  }
  void Assign(std::int64_t n, std::int64_t d) {
    if (d == 0) Fail(ErrorKind::kInvalidInput, "zero denominator");
    *this = Make(n, d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Exact phase-one simplex (Bland's rule): finds lambda >= 0 with
/// sum_j lambda_j * columns[j] == target, or reports infeasibility.
inline std::optional<std::vector<Rational>> NonnegativeCombination(
    const IntMatrix& columns, std::span<const std::int64_t> target) {
  const std::size_t rows = target.size();
  const std::size_t n = columns.size();
  for (const auto& col : columns) {
    Require(col.size() == rows, "column length does not match target length");
  }
  // Tableau over variables [lambda_0..lambda_{n-1}, art_0..art_{rows-1}] | rhs.
  const std::size_t width = n + rows + 1;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::int64_t flip = target[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip * columns[j][i];
    t[i][n + i] = 1;
    t[i][width - 1] = flip * target[i];
    basis[i] = n + i;
  }
  // Reduced costs for minimizing the sum of artificials.
  std::vector<Rational> cost(width);
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < n + rows) continue;
    Rational s;
    for (std::size_t i = 0; i < rows; ++i) s = s - t[i][j];
    cost[j] = s;
  }
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen in phase one
    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x = x / pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter].sign() == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] = t[i][j] - f * t[leave][j];
    }
    const Rational f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] = cost[j] - f * t[leave][j];
    basis[leave] = enter;
  }
  // Objective value is -cost[rhs]; feasible iff it is zero.
  if (cost[width - 1].sign() != 0) return std::nullopt;
  std::vector<Rational> lambda(n);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < n) lambda[basis[i]] = t[i][width - 1];
  }
  return lambda;
}

}  // namespace edgering
