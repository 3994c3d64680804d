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

// Brute-force enumeration of lattice words. Shares nothing with the DP engine
// or the closed forms beyond the core types, so it can arbitrate between them.

#pragma once

#include "latpath/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace latpath::oracle {

inline constexpr int kDefaultCap = 14;

struct WordFilter {
  int start_row = 1;
  std::optional<int> floor;    // lowest allowed row
  std::optional<int> ceiling;  // highest allowed row
  std::optional<int> end_row;
  std::optional<int> net_displacement;
  std::vector<Step> alphabet{Step::up, Step::right, Step::down};

  /// Confine to rows [1, dims.rows].
  WordFilter& confine_to(const TableDims& dims) {
    floor = 1;
    ceiling = dims.rows;
    return *this;
  }
};

namespace detail {

inline void check_cap(int length, int cap) {
  if (length > cap)
    throw resource_error("enumeration length " + std::to_string(length) + " exceeds oracle cap " +
                         std::to_string(cap));
}

inline std::optional<int> target_row(const WordFilter& f) {
  std::optional<int> target = f.end_row;
  if (f.net_displacement) {
    const int via_net = f.start_row + *f.net_displacement;
    if (target && *target != via_net) return std::nullopt;
    target = via_net;
  }
  return target;
}

template <class Visitor>
class Backtracker {
 public:
  Backtracker(const WordFilter& f, int length, std::optional<int> target, Visitor& visit)
      : filter_(f), length_(length), target_(target), visit_(visit) {
    for (Step s : kAllSteps)
      if (std::find(f.alphabet.begin(), f.alphabet.end(), s) != f.alphabet.end())
        alphabet_.push_back(s);
    prefix_.reserve(static_cast<std::size_t>(length));
  }

  void run() {
    if (allowed(filter_.start_row)) descend(filter_.start_row);
  }

 private:
  bool allowed(int row) const {
    if (filter_.floor && row < *filter_.floor) return false;
    if (filter_.ceiling && row > *filter_.ceiling) return false;
    return true;
  }

  void descend(int row) {
    const int remaining = length_ - static_cast<int>(prefix_.size());
    if (target_ && std::abs(*target_ - row) > remaining) return;
    if (remaining == 0) {
      visit_(std::span<const Step>(prefix_), filter_.start_row);
      return;
    }
    for (Step s : alphabet_) {
      const int next = row + row_delta(s);
      if (!allowed(next)) continue;
      prefix_.push_back(s);
      descend(next);
      prefix_.pop_back();
    }
  }

  const WordFilter& filter_;
  int length_;
  std::optional<int> target_;
  Visitor& visit_;
  std::vector<Step> alphabet_;
  std::vector<Step> prefix_;
};

}  // namespace detail

/// Calls visit(std::span<const Step>, int start_row) for every matching word,
/// in lexicographic order u < r < d. Prefixes that already violate the
/// filter are pruned.
template <class Visitor>
void for_each_word(int length, const WordFilter& filter, Visitor&& visit, int cap = kDefaultCap) {
  if (length < 0) throw std::domain_error("negative word length");
  detail::check_cap(length, cap);
  const bool inconsistent = filter.end_row && filter.net_displacement &&
                            *filter.end_row != filter.start_row + *filter.net_displacement;
  if (inconsistent) return;
  detail::Backtracker<std::remove_reference_t<Visitor>> bt(filter, length, detail::target_row(filter),
                                                           visit);
  bt.run();
}

inline std::vector<LatticeWord> enumerate_words(int length, const WordFilter& filter,
                                                int cap = kDefaultCap) {
  std::vector<LatticeWord> out;
  for_each_word(
      length, filter,
      [&](std::span<const Step> letters, int start) {
        out.emplace_back(start, std::vector<Step>(letters.begin(), letters.end()));
      },
      cap);
  return out;
}

inline BigCount count_words(int length, const WordFilter& filter, int cap = kDefaultCap) {
  std::size_t n = 0;
  for_each_word(length, filter, [&](std::span<const Step>, int) { ++n; }, cap);
  return BigCount(n);
}

inline BigCount brute_pair_count(TableDims dims, Cell from, Cell to, int cap = kDefaultCap) {
  if (!inside(dims, from) || !inside(dims, to)) throw std::domain_error("cell outside the table");
  if (from.col > to.col) throw std::domain_error("paths cannot move to an earlier column");
  WordFilter f;
  f.confine_to(dims);
  f.start_row = from.row;
  f.end_row = to.row;
  return count_words(to.col - from.col, f, cap);
}

/// Row-words a_1..a_n over [1,m] with |a_{k+1} - a_k| <= 1.
inline BigCount brute_imn(TableDims dims, int cap = kDefaultCap) {
  detail::check_cap(dims.cols, cap);
  detail::check_cap(dims.rows, cap);
  BigCount total = 0;
  for (int start = 1; start <= dims.rows; ++start) {
    WordFilter f;
    f.confine_to(dims);
    f.start_row = start;
    total += count_words(dims.cols - 1, f, cap);
  }
  return total;
}

/// y-step words over {u,r,d} with #u - #d = x.
inline BigCount brute_free(int x, int y, int cap = kDefaultCap) {
  WordFilter f;
  f.start_row = 0;
  f.net_displacement = x;
  return count_words(y, f, cap);
}

}  // namespace latpath::oracle
