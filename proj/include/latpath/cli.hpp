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

// Subcommand bodies for the `latpath` tool. Argument parsing lives in
// tools/latpath.cpp; everything here returns captured output so the commands
// can be driven from tests.
//
// Exit codes: 0 success, 1 usage or resource error, 2 verification mismatch.

#pragma once

#include "latpath/closed_forms.hpp"
#include "latpath/core.hpp"
#include "latpath/dp_engine.hpp"
#include "latpath/io.hpp"
#include "latpath/oracle.hpp"
#include "latpath/verifier.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latpath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

inline constexpr const char* kCapEnv = "LATPATH_CAP";

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// --cap wins over $LATPATH_CAP, which wins over the default.
inline int resolve_cap(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kCapEnv); env && *env) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(kCapEnv) + " is not an integer: " + env);
    }
  }
  return oracle::kDefaultCap;
}

namespace detail {

inline CommandResult usage(const std::string& msg) { return {kExitUsage, "", msg + "\n"}; }

inline io::OutputFormat format_or_throw(const std::string& s) {
  auto f = io::parse_format(s);
  if (!f) throw std::invalid_argument("unknown format '" + s + "' (csv|json|markdown)");
  return *f;
}

template <class Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const resource_error& e) {
    return usage(std::string("resource error: ") + e.what());
  } catch (const std::domain_error& e) {
    return usage(std::string("domain error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return usage(std::string("usage error: ") + e.what());
  } catch (const std::out_of_range& e) {
    return usage(std::string("usage error: ") + e.what());
  }
}

}  // namespace detail

struct TableArgs {
  std::string kind = "d1";
  int rows = 1;
  int cols = 1;
  std::string format = "markdown";
  bool footer = false;
};

inline CountMatrix build_table(io::TableKind kind, TableDims dims) {
  switch (kind) {
    case io::TableKind::d1: return dp::di_table(dims, 1);
    case io::TableKind::d: return dp::d_table(dims);
    case io::TableKind::a: return dp::a_table(dims);
    case io::TableKind::h: return dp::h_table(dims);
  }
  throw std::logic_error("unreachable table kind");
}

inline CommandResult cmd_table(const TableArgs& a) {
  return detail::guarded([&]() -> CommandResult {
    auto kind = io::parse_kind(a.kind);
    if (!kind) return detail::usage("unknown table kind '" + a.kind + "' (d1|d|a|h)");
    const auto fmt = detail::format_or_throw(a.format);
    const TableDims dims(a.rows, a.cols);
    return {kExitOk, io::render_table(*kind, build_table(*kind, dims), fmt, {a.footer}), ""};
  });
}

struct CountArgs {
  int rows = 1;
  int cols = 1;
  Cell from;
  Cell to;
};

inline CommandResult cmd_count(const CountArgs& a) {
  return detail::guarded([&]() -> CommandResult {
    const TableDims dims(a.rows, a.cols);
    return {kExitOk, dp::bounded_pair_count(dims, a.from, a.to).str() + "\n", ""};
  });
}

struct SequenceArgs {
  std::string target = "imn-fixed-m";
  int m = 1;
  int max_n = 1;
  std::string format = "csv";
};

inline CommandResult cmd_sequence(const SequenceArgs& a) {
  return detail::guarded([&]() -> CommandResult {
    const auto fmt = detail::format_or_throw(a.format);
    if (a.m < 1 || a.max_n < 1) return detail::usage("m and max-n must be positive");
    std::vector<BigCount> values;
    if (a.target == "imn-fixed-m") {
      for (int n = 1; n <= a.max_n; ++n) values.push_back(dp::imn(TableDims(a.m, n)));
    } else if (a.target == "d1-bottom-row") {
      const CountMatrix d1 = dp::di_table(TableDims(a.m, a.max_n), 1);
      for (int s = 1; s <= a.max_n; ++s) values.push_back(d1.at(s, 1));
    } else {
      return detail::usage("unknown sequence target '" + a.target +
                           "' (imn-fixed-m|d1-bottom-row)");
    }
    return {kExitOk, io::render_sequence(a.target, a.m, values, fmt), ""};
  });
}

struct VerifyArgs {
  std::string identity = "all";
  std::optional<int> rows;  // pin m
  std::optional<int> cols;  // pin n
  std::optional<int> max_rows;
  std::optional<int> max_cols;
  std::optional<int> max_y;
  std::optional<int> max_span;
  std::optional<int> span_slack;
  std::optional<int> cap;
  bool calibrate = false;
  std::string format = "markdown";
};

inline verify::Domain apply_overrides(verify::Domain d, const VerifyArgs& a, int cap) {
  if (a.max_rows) d.rows.hi = *a.max_rows;
  if (a.max_cols) d.cols.hi = *a.max_cols;
  if (a.rows) d.rows = {*a.rows, *a.rows};
  if (a.cols) d.cols = {*a.cols, *a.cols};
  if (a.max_y) d.y.hi = *a.max_y;
  if (a.max_span) d.span.hi = *a.max_span;
  if (a.span_slack) d.span_slack = *a.span_slack;
  d.cap = cap;
  if (d.rows.lo < 1 || d.cols.lo < 1) throw std::invalid_argument("row and column bounds start at 1");
  return d;
}

inline CommandResult cmd_verify(const VerifyArgs& a) {
  return detail::guarded([&]() -> CommandResult {
    const auto fmt = detail::format_or_throw(a.format);
    const int cap = resolve_cap(a.cap);

    std::vector<verify::IdentitySpec> specs;
    if (a.identity == "all") {
      if (a.calibrate) return detail::usage("--calibrate needs a single identity");
      specs = verify::default_suite();
    } else {
      auto id = verify::parse_identity(a.identity);
      if (!id) return detail::usage("unknown identity '" + a.identity + "'");
      specs.push_back(verify::default_spec(*id));
    }
    for (auto& s : specs) s.domain = apply_overrides(s.domain, a, cap);

    if (a.calibrate) {
      if (!verify::calibratable(specs[0].id))
        return detail::usage("calibration is defined for H-SQUARE, S2, D-BOUNDARY, D-BOUNDARY-PRINTED");
      return {kExitOk, io::render_calibration(verify::calibrate_domain(specs[0].id, specs[0].domain), fmt),
              ""};
    }

    const auto reports = verify::run_suite(specs);
    const bool ok = verify::all_meet_expectation(reports);
    return {ok ? kExitOk : kExitMismatch, io::render_reports(reports, fmt),
            ok ? "" : "verification mismatch\n"};
  });
}

struct WordsArgs {
  int length = 0;
  int start = 1;
  std::optional<int> end_row;
  std::optional<int> net;
  std::optional<int> floor;
  std::optional<int> ceiling;
  std::optional<int> rows;  // shorthand for floor 1, ceiling rows
  std::string alphabet = "urd";
  std::optional<int> cap;
  std::string format = "markdown";
};

inline CommandResult cmd_words(const WordsArgs& a) {
  return detail::guarded([&]() -> CommandResult {
    const auto fmt = detail::format_or_throw(a.format);
    oracle::WordFilter f;
    f.start_row = a.start;
    if (a.rows) f.confine_to(TableDims(*a.rows, 1));
    if (a.floor) f.floor = *a.floor;
    if (a.ceiling) f.ceiling = *a.ceiling;
    f.end_row = a.end_row;
    f.net_displacement = a.net;
    f.alphabet.clear();
    for (char c : a.alphabet) f.alphabet.push_back(step_from_letter(c));
    return {kExitOk, io::render_words(oracle::enumerate_words(a.length, f, resolve_cap(a.cap)), fmt),
            ""};
  });
}

}  // namespace latpath::cli
