// Copyright 2026 The latpath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Direct evaluators for the counting identities. Everything here is built
// from binomial arithmetic plus lower-order D^1 / D values; none of it calls
// the DP routine it is compared against in the verifier.
//
// Functions that need D^1 inside an m-row table take a D1Source, a callable
// (s, t) -> BigCount. ConfinedD1 is the stock source.

#pragma once

#include "latpath/core.hpp"
#include "latpath/dp_engine.hpp"

#include <algorithm>
#include <concepts>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace latpath::closed {

class BinomialTable {
 public:
  explicit BinomialTable(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw std::domain_error("negative binomial table size");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
      auto& row = rows_[static_cast<std::size_t>(n)];
      row.resize(static_cast<std::size_t>(n) + 1);
      row.front() = row.back() = 1;
      for (int k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }

  int max_n() const { return max_n_; }

  BigCount get(int n, int k) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("binomial table row out of range");
    if (k < 0 || k > n) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  int max_n_;
  std::vector<std::vector<BigCount>> rows_;
};

/// Exact C(n,k); zero outside the Pascal triangle.
inline BigCount binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

namespace detail {

inline BigCount exact_div(const BigCount& num, const BigCount& den, const char* what) {
  BigCount q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error(std::string("inexact division in ") + what);
  return q;
}

inline void require_t_le_s(int s, int t) {
  if (s < 1 || t < 1) throw std::domain_error("indices are 1-based");
  if (t > s)
    throw std::domain_error("row " + std::to_string(t) + " unreachable from row 1 in column " +
                            std::to_string(s));
}

}  // namespace detail

/// Ballot form A(s,t) = 2t/(s+t) * C(s-1, (s-t)/2).
inline BigCount a_closed(int s, int t) {
  detail::require_t_le_s(s, t);
  if ((s - t) % 2 != 0) return 0;
  return detail::exact_div(BigCount(2 * t) * binomial(s - 1, (s - t) / 2), BigCount(s + t),
                           "a_closed");
}

/// D^1(s,t) by inserting r steps into a u/d ballot path.
inline BigCount d1_via_a(int s, int t) {
  detail::require_t_le_s(s, t);
  BigCount sum = 0;
  for (int i = 0; i <= (s - t) / 2; ++i) sum += binomial(s - 1, s - t - 2 * i) * a_closed(t + 2 * i, t);
  return sum;
}

/// D^1(s,t) = sum_i t/(t+i) C(s-1, s-t-2i) C(t+2i-1, i).
inline BigCount d1_closed(int s, int t) {
  detail::require_t_le_s(s, t);
  BigCount sum = 0;
  for (int i = 0; i <= (s - t) / 2; ++i) {
    BigCount ballot = detail::exact_div(BigCount(t) * binomial(t + 2 * i - 1, i), BigCount(t + i),
                                        "d1_closed");
    sum += binomial(s - 1, s - t - 2 * i) * ballot;
  }
  return sum;
}

/// Floor-only D^1 with the convention D^1(s,t) = 0 when row t is unreachable.
inline BigCount d1_floor(int s, int t) {
  if (s < 1 || t < 1 || t > s) return 0;
  return d1_closed(s, t);
}

template <class F>
concept D1Source = requires(const F& f, int s, int t) {
  { f(s, t) } -> std::convertible_to<BigCount>;
};

/// D^1 inside an m-row table, columns 1..max_col. Out-of-range rows give 0.
class ConfinedD1 {
 public:
  ConfinedD1(int rows, int max_col) : table_(dp::di_table(TableDims(rows, std::max(max_col, 1)), 1)) {}

  int rows() const { return table_.dims().rows; }

  BigCount operator()(int s, int t) const {
    if (t < 1 || t > table_.dims().rows || s < 1) return 0;
    if (s > table_.dims().cols)
      throw std::out_of_range("ConfinedD1 built for " + std::to_string(table_.dims().cols) +
                              " columns, asked for column " + std::to_string(s));
    return table_.at(s, t);
  }

 private:
  CountMatrix table_;
};

static_assert(D1Source<ConfinedD1>);

namespace detail {

template <D1Source F>
BigCount h_via_square_formula(int n, int m, const BigCount& d_square, const F& d1) {
  BigCount leaving = 0;
  for (int i = m; i <= n - 1; ++i) leaving += pow3(n - i - 1) * d1(i, m);
  return d_square - leaving;
}

}  // namespace detail

inline void require_h_square_domain(int n, int m) {
  if (m < 1 || n < m || n > 2 * m)
    throw std::domain_error("h_via_square needs m <= n <= 2m, got n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
}

/// H(n,m) = D(n,n) - sum_{i=m}^{n-1} 3^{n-i-1} D^1(i,m), where D(n,n) is read
/// from the n x n table and D^1 from the m-row table.
template <D1Source F>
BigCount h_via_square(int n, int m, const BigCount& d_square, const F& d1) {
  require_h_square_domain(n, m);
  return detail::h_via_square_formula(n, m, d_square, d1);
}

inline BigCount h_via_square(int n, int m) {
  require_h_square_domain(n, m);
  BigCount d_square = dp::d_table(TableDims(n, n)).at(n, n);
  return detail::h_via_square_formula(n, m, d_square, ConfinedD1(m, n));
}

/// D^1(n,m) = sum_i D^1(s,i) D^1(n-s+1, m-i+1), split at column s.
template <D1Source F>
BigCount d1_split(int n, int m, int s, const F& d1) {
  if (s < 1 || s > n)
    throw std::domain_error("split column " + std::to_string(s) + " outside [1," +
                            std::to_string(n) + "]");
  BigCount sum = 0;
  for (int i = 1; i <= m; ++i) sum += d1(s, i) * d1(n - s + 1, m - i + 1);
  return sum;
}

inline BigCount d1_split(int n, int m, int s) { return d1_split(n, m, s, ConfinedD1(m, n)); }

namespace detail {

// Sum of 3^{s-i-1} D^1(i,row) for i in [first, s-1].
template <D1Source F>
BigCount leak_sum(int s, int row, int first, const F& d1) {
  BigCount sum = 0;
  for (int i = std::max(first, 1); i <= s - 1; ++i) sum += pow3(s - i - 1) * d1(i, row);
  return sum;
}

inline void require_in_table(const TableDims& dims, int s, int t) {
  if (!dims.contains_col(s) || !dims.contains_row(t))
    throw std::domain_error("(" + std::to_string(s) + "," + std::to_string(t) +
                            ") outside the table");
}

}  // namespace detail

/// D(s,t) by removing, from all 3^{s-1} words, those that step outside the
/// table, classified by where they are last outside (reading from (s,t)).
template <D1Source F>
BigCount d_boundary(TableDims dims, int s, int t, const F& d1) {
  detail::require_in_table(dims, s, t);
  const int m = dims.rows;
  return pow3(s - 1) - detail::leak_sum(s, t, t, d1) - detail::leak_sum(s, m + 1 - t, m + 1 - t, d1);
}

inline BigCount d_boundary(TableDims dims, int s, int t) {
  return closed::d_boundary(dims, s, t, ConfinedD1(dims.rows, dims.cols));
}

/// I_m(n) = sum_i D(a,i) D(b,i) with a + b = n + 1.
inline BigCount i_inner(TableDims dims, int a, const CountMatrix& d) {
  if (a < 1 || a > dims.cols)
    throw std::domain_error("column " + std::to_string(a) + " outside [1," +
                            std::to_string(dims.cols) + "]");
  if (d.dims() != dims) throw std::invalid_argument("D table dimensions do not match");
  const int b = dims.cols + 1 - a;
  BigCount sum = 0;
  for (int i = 1; i <= dims.rows; ++i) sum += d.at(a, i) * d.at(b, i);
  return sum;
}

inline BigCount i_inner(TableDims dims, int a) { return i_inner(dims, a, dp::d_table(dims)); }

/// S(x,y) = sum_i C(y, |x|+i) C(y-|x|-i, i), i = number of d steps.
inline BigCount s_free_closed(int x, int y) {
  if (y < 0) throw std::domain_error("negative step count");
  const int ax = std::abs(x);
  if (ax > y) return 0;
  BigCount sum = 0;
  for (int i = 0; i <= (y - ax) / 2; ++i) sum += binomial(y, ax + i) * binomial(y - ax - i, i);
  return sum;
}

namespace detail {

// First-exit decomposition with floor-only D^1 prefixes and free suffixes.
// Exact as long as no path can leave through both boundaries.
inline BigCount s2_formula(int m, int from_row, int to_row, int span) {
  BigCount total = s_free_closed(to_row - from_row, span);
  for (int k = from_row; k <= span; ++k)
    total -= d1_floor(k, from_row) * s_free_closed(to_row, span - k);
  const int mirrored = m + 1 - from_row;
  for (int k = mirrored; k <= span; ++k)
    total -= d1_floor(k, mirrored) * s_free_closed(m + 1 - to_row, span - k);
  return total;
}

}  // namespace detail

/// Widest column span on which s2_closed is exact: leaving through both
/// boundaries and coming back inside takes at least rows + 3 steps.
inline int s2_max_span(const TableDims& dims) { return dims.rows + 2; }

/// Bounded pair count from free counts minus one correction per boundary.
inline BigCount s2_closed(TableDims dims, Cell from, Cell to) {
  if (!inside(dims, from) || !inside(dims, to)) throw std::domain_error("cell outside the table");
  const int span = to.col - from.col;
  if (span < 0) throw std::domain_error("paths cannot move to an earlier column");
  if (span > s2_max_span(dims))
    throw std::domain_error("column span " + std::to_string(span) + " exceeds rows+2 = " +
                            std::to_string(s2_max_span(dims)));
  return detail::s2_formula(dims.rows, from.row, to.row, span);
}

/// Formulas exactly as typeset. They are wrong and exist only so the
/// verifier can report where they break.
namespace printed {

/// Boundary lemma with sums starting at t+1 and m+2-t.
template <D1Source F>
BigCount d_boundary(TableDims dims, int s, int t, const F& d1) {
  detail::require_in_table(dims, s, t);
  const int m = dims.rows;
  return pow3(s - 1) - detail::leak_sum(s, t, t + 1, d1) -
         detail::leak_sum(s, m + 1 - t, m + 2 - t, d1);
}

inline BigCount d_boundary(TableDims dims, int s, int t) {
  return printed::d_boundary(dims, s, t, ConfinedD1(dims.rows, dims.cols));
}

/// S(x,y) with C(y, |x|+1) in place of C(y, |x|+i).
inline BigCount s_free(int x, int y) {
  if (y < 0) throw std::domain_error("negative step count");
  const int ax = std::abs(x);
  BigCount sum = 0;
  for (int i = 0; i <= (y - ax) / 2 && ax <= y; ++i)
    sum += binomial(y, ax + 1) * binomial(y - ax - i, i);
  return sum;
}

}  // namespace printed

}  // namespace latpath::closed
