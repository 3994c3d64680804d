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

// Shared domain types for lattice paths inside an m x n table with steps
// u = (1,1), r = (1,0), d = (1,-1).
//
// Index convention: every public interface speaks 1-based (column s, row t)
// with s horizontal. Row 1 is the bottom row of the table.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latpath {

/// Arbitrary-precision count. Counts are never negative; the type is signed
/// so that inclusion-exclusion intermediates can be formed directly.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& v) { return v.str(); }

inline BigCount from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("not a decimal count: " + std::string(text));
  }
  return BigCount(std::string(text));
}

inline BigCount pow3(int e) {
  if (e < 0) return 0;
  return boost::multiprecision::pow(BigCount(3), static_cast<unsigned>(e));
}

/// Resource limits (e.g. the brute-force enumeration cap) were exceeded.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableDims {
  int rows = 1;  // m
  int cols = 1;  // n

  constexpr TableDims() = default;
  constexpr TableDims(int m, int n) : rows(m), cols(n) {
    if (m < 1 || n < 1) throw std::domain_error("table dimensions must be positive");
  }

  constexpr bool contains_row(int t) const { return t >= 1 && t <= rows; }
  constexpr bool contains_col(int s) const { return s >= 1 && s <= cols; }

  friend constexpr bool operator==(const TableDims&, const TableDims&) = default;
};

/// A blank of the table. Rows 0 and rows+1 are the virtual boundary rows.
struct Cell {
  int col = 1;
  int row = 1;

  friend constexpr bool operator==(const Cell&, const Cell&) = default;
};

constexpr bool inside(const TableDims& dims, const Cell& c) {
  return dims.contains_col(c.col) && dims.contains_row(c.row);
}

enum class Step : char { up = 'u', right = 'r', down = 'd' };

constexpr int row_delta(Step s) {
  switch (s) {
    case Step::up: return 1;
    case Step::right: return 0;
    case Step::down: return -1;
  }
  return 0;
}

constexpr char letter(Step s) { return static_cast<char>(s); }

inline Step step_from_letter(char c) {
  switch (c) {
    case 'u': return Step::up;
    case 'r': return Step::right;
    case 'd': return Step::down;
    default: throw std::invalid_argument(std::string("unknown step letter '") + c + "'");
  }
}

/// Canonical enumeration order u < r < d.
inline constexpr Step kAllSteps[] = {Step::up, Step::right, Step::down};

class LatticeWord {
 public:
  LatticeWord() = default;
  LatticeWord(int start_row, std::vector<Step> letters)
      : start_row_(start_row), letters_(std::move(letters)) {}

  static LatticeWord parse(int start_row, std::string_view text) {
    std::vector<Step> letters;
    letters.reserve(text.size());
    for (char c : text) letters.push_back(step_from_letter(c));
    return {start_row, std::move(letters)};
  }

  int start_row() const { return start_row_; }
  const std::vector<Step>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  int end_row() const {
    int r = start_row_;
    for (Step s : letters_) r += row_delta(s);
    return r;
  }

  /// "uud" style spelling; the empty word spells as "".
  std::string spelling() const {
    std::string out;
    out.reserve(letters_.size());
    for (Step s : letters_) out.push_back(letter(s));
    return out;
  }

  friend bool operator==(const LatticeWord&, const LatticeWord&) = default;

 private:
  int start_row_ = 1;
  std::vector<Step> letters_;
};

/// |h|_W
inline BigCount letter_count(const LatticeWord& word, Step h) {
  std::size_t n = 0;
  for (Step s : word.letters())
    if (s == h) ++n;
  return BigCount(n);
}

/// Rows visited: r_0 = start_row, r_k = r_{k-1} + delta(letter_k).
inline std::vector<int> row_trace(const LatticeWord& word) {
  std::vector<int> rows;
  rows.reserve(word.size() + 1);
  int r = word.start_row();
  rows.push_back(r);
  for (Step s : word.letters()) {
    r += row_delta(s);
    rows.push_back(r);
  }
  return rows;
}

inline bool is_confined(const LatticeWord& word, int rows) {
  for (int r : row_trace(word))
    if (r < 1 || r > rows) return false;
  return true;
}

/// Row-word spelling as in "121" (one digit per visited row, rows < 10).
inline std::string row_word(const LatticeWord& word) {
  std::string out;
  for (int r : row_trace(word)) out += std::to_string(r);
  return out;
}

/// Dense (column, row)-indexed matrix of counts over 1..cols x 1..rows.
class CountMatrix {
 public:
  CountMatrix() = default;
  explicit CountMatrix(TableDims dims)
      : dims_(dims),
        entries_(static_cast<std::size_t>(dims.rows) * static_cast<std::size_t>(dims.cols)) {}

  const TableDims& dims() const { return dims_; }

  const BigCount& at(int s, int t) const { return entries_[index(s, t)]; }
  BigCount& at(int s, int t) { return entries_[index(s, t)]; }

  /// Column s as a vector indexed by t-1.
  std::vector<BigCount> column(int s) const {
    std::vector<BigCount> out;
    out.reserve(dims_.rows);
    for (int t = 1; t <= dims_.rows; ++t) out.push_back(at(s, t));
    return out;
  }

  BigCount column_sum(int s) const {
    BigCount sum = 0;
    for (int t = 1; t <= dims_.rows; ++t) sum += at(s, t);
    return sum;
  }

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  std::size_t index(int s, int t) const {
    if (!dims_.contains_col(s) || !dims_.contains_row(t))
      throw std::out_of_range("CountMatrix index (" + std::to_string(s) + "," +
                              std::to_string(t) + ") outside " + std::to_string(dims_.rows) +
                              "x" + std::to_string(dims_.cols));
    return static_cast<std::size_t>(s - 1) * static_cast<std::size_t>(dims_.rows) +
           static_cast<std::size_t>(t - 1);
  }

  TableDims dims_;
  std::vector<BigCount> entries_;
};

}  // namespace latpath
