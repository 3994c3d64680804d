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

// Column-by-column dynamic programming for every counting family:
//
//   D^i(s,t)  paths (1,i) -> (s,t) confined to rows [1,m]
//   D(s,t)    sum over i of D^i(s,t)
//   A(s,t)    paths (1,1) -> (s,t) using only u and d
//   H(s,t)    sum_{i<=t} D^1(s,i)
//   I_m(n)    all paths from the first column to the last one
//   S(x,y)    y-step words with net displacement x, no boundaries
//
// This is the ground truth the closed forms are checked against.

#pragma once

#include "latpath/core.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latpath::dp {

struct BoundaryMode {
  bool floor_at_1 = true;
  bool ceiling_at_m = true;

  static constexpr BoundaryMode confined() { return {true, true}; }
  static constexpr BoundaryMode floor_only() { return {true, false}; }
  static constexpr BoundaryMode unbounded() { return {false, false}; }
};

using StepSet = std::span<const Step>;

inline constexpr Step kMotzkinSteps[] = {Step::up, Step::right, Step::down};
inline constexpr Step kDyckSteps[] = {Step::up, Step::down};

/// Counts on a contiguous window of rows [lo, lo + size).
class StripColumn {
 public:
  StripColumn(int lo, std::vector<BigCount> values) : lo_(lo), values_(std::move(values)) {}

  static StripColumn unit(int row) { return StripColumn(row, {BigCount(1)}); }

  static StripColumn ones(int rows) {
    return StripColumn(1, std::vector<BigCount>(static_cast<std::size_t>(rows), BigCount(1)));
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }

  BigCount at(int row) const {
    if (row < lo_ || row > hi()) return 0;
    return values_[static_cast<std::size_t>(row - lo_)];
  }

  BigCount total() const {
    BigCount sum = 0;
    for (const auto& v : values_) sum += v;
    return sum;
  }

  /// One column to the right. `rows` is the table height used by the
  /// ceiling; it is ignored when the ceiling is off.
  StripColumn advanced(StepSet steps, BoundaryMode mode, int rows) const {
    int new_lo = lo_ - 1;
    int new_hi = hi() + 1;
    if (mode.floor_at_1) new_lo = std::max(new_lo, 1);
    if (mode.ceiling_at_m) new_hi = std::min(new_hi, rows);
    if (new_hi < new_lo) return StripColumn(1, {});
    std::vector<BigCount> next(static_cast<std::size_t>(new_hi - new_lo + 1));
    for (int r = new_lo; r <= new_hi; ++r) {
      BigCount& cell = next[static_cast<std::size_t>(r - new_lo)];
      // a step with delta d lands on r from r - d
      for (Step s : steps) cell += at(r - row_delta(s));
    }
    return StripColumn(new_lo, std::move(next));
  }

 private:
  int lo_;
  std::vector<BigCount> values_;
};

namespace detail {

inline CountMatrix fill(TableDims dims, StripColumn col, StepSet steps) {
  CountMatrix out(dims);
  for (int s = 1; s <= dims.cols; ++s) {
    if (s > 1) col = col.advanced(steps, BoundaryMode::confined(), dims.rows);
    for (int t = 1; t <= dims.rows; ++t) out.at(s, t) = col.at(t);
  }
  return out;
}

inline void require_start_row(const TableDims& dims, int i) {
  if (!dims.contains_row(i))
    throw std::domain_error("start row " + std::to_string(i) + " outside [1," +
                            std::to_string(dims.rows) + "]");
}

}  // namespace detail

/// D^i(s,t) over the whole table.
inline CountMatrix di_table(TableDims dims, int start_row) {
  detail::require_start_row(dims, start_row);
  return detail::fill(dims, StripColumn::unit(start_row), kMotzkinSteps);
}

/// D(s,t) = sum_i D^i(s,t); column 1 is all ones.
inline CountMatrix d_table(TableDims dims) {
  return detail::fill(dims, StripColumn::ones(dims.rows), kMotzkinSteps);
}

/// A(s,t) restricted to the table's rows.
inline CountMatrix a_table(TableDims dims) {
  return detail::fill(dims, StripColumn::unit(1), kDyckSteps);
}

/// A(s,t) inside the n x n table, where the ceiling never binds.
inline CountMatrix a_table(int n) { return a_table(TableDims(n, n)); }

/// H(s,t) = sum_{i=1}^{t} D^1(s,i).
inline CountMatrix h_table(TableDims dims) {
  CountMatrix d1 = di_table(dims, 1);
  CountMatrix out(dims);
  for (int s = 1; s <= dims.cols; ++s) {
    BigCount running = 0;
    for (int t = 1; t <= dims.rows; ++t) {
      running += d1.at(s, t);
      out.at(s, t) = running;
    }
  }
  return out;
}

/// l(i,j;s,t:S) inside the table.
inline BigCount bounded_pair_count(TableDims dims, Cell from, Cell to) {
  if (!inside(dims, from) || !inside(dims, to))
    throw std::domain_error("cell outside the table");
  if (from.col > to.col) throw std::domain_error("paths cannot move to an earlier column");
  StripColumn col = StripColumn::unit(from.row);
  for (int s = from.col; s < to.col; ++s)
    col = col.advanced(kMotzkinSteps, BoundaryMode::confined(), dims.rows);
  return col.at(to.row);
}

/// I_m(n): number of perfect lattice paths.
inline BigCount imn(TableDims dims) {
  StripColumn col = StripColumn::ones(dims.rows);
  for (int s = 1; s < dims.cols; ++s)
    col = col.advanced(kMotzkinSteps, BoundaryMode::confined(), dims.rows);
  return col.total();
}

/// S(x,y): y-step words over {u,r,d} with #u - #d = x.
inline BigCount free_count(int x, int y) {
  if (y < 0) throw std::domain_error("negative step count");
  StripColumn col = StripColumn::unit(0);
  for (int k = 0; k < y; ++k) col = col.advanced(kMotzkinSteps, BoundaryMode::unbounded(), 0);
  return col.at(x);
}

/// Paths of `steps` steps from `from_row` to `to_row` under an arbitrary
/// boundary mode. Used for floor-only (ballot-style) families.
inline BigCount walk_count(int from_row, int to_row, int steps, BoundaryMode mode, int rows,
                           StepSet alphabet = kMotzkinSteps) {
  StripColumn col = StripColumn::unit(from_row);
  for (int k = 0; k < steps; ++k) col = col.advanced(alphabet, mode, rows);
  return col.at(to_row);
}

}  // namespace latpath::dp
