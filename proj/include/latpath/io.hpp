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

// Serialization of count tables, sequences, word listings and verification
// reports. Every count is written as a decimal string.
//
//   csv       header "s,t,value", LF line endings
//   json      {"dims": {...}, "kind": ..., "entries": [[s, t, "decimal"], ...]}
//   markdown  grid with row t decreasing downward, blank where unreachable

#pragma once

#include "latpath/core.hpp"
#include "latpath/verifier.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latpath::io {

enum class OutputFormat { csv, json, markdown };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "markdown") return OutputFormat::markdown;
  return std::nullopt;
}

enum class TableKind { d1, d, a, h };

inline std::optional<TableKind> parse_kind(std::string_view s) {
  if (s == "d1") return TableKind::d1;
  if (s == "d") return TableKind::d;
  if (s == "a") return TableKind::a;
  if (s == "h") return TableKind::h;
  return std::nullopt;
}

inline std::string_view name(TableKind k) {
  switch (k) {
    case TableKind::d1: return "d1";
    case TableKind::d: return "d";
    case TableKind::a: return "a";
    case TableKind::h: return "h";
  }
  return "?";
}

/// Families started at row 1 cannot reach rows above their column index;
/// those cells are left blank in the markdown grid, as in printed tables.
inline bool populated(TableKind k, int s, int t) {
  return (k == TableKind::d1 || k == TableKind::a) ? t <= s : true;
}

struct TableOptions {
  bool column_sum_footer = false;  // adds H(s,m) = sum_t D^1(s,t) under the grid
};

inline std::string render_table(TableKind kind, const CountMatrix& m, OutputFormat fmt,
                                TableOptions opts = {}) {
  const TableDims& dims = m.dims();
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::csv:
      out << "s,t,value\n";
      for (int s = 1; s <= dims.cols; ++s)
        for (int t = 1; t <= dims.rows; ++t) out << s << ',' << t << ',' << m.at(s, t).str() << '\n';
      break;

    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["dims"] = {{"rows", dims.rows}, {"cols", dims.cols}};
      j["kind"] = std::string(name(kind));
      auto entries = nlohmann::ordered_json::array();
      for (int s = 1; s <= dims.cols; ++s)
        for (int t = 1; t <= dims.rows; ++t) entries.push_back({s, t, m.at(s, t).str()});
      j["entries"] = std::move(entries);
      out << j.dump() << '\n';
      break;
    }

    case OutputFormat::markdown: {
      out << "| t\\s |";
      for (int s = 1; s <= dims.cols; ++s) out << ' ' << s << " |";
      out << "\n|---|";
      for (int s = 1; s <= dims.cols; ++s) out << "---:|";
      out << '\n';
      for (int t = dims.rows; t >= 1; --t) {
        out << "| " << t << " |";
        for (int s = 1; s <= dims.cols; ++s) {
          if (populated(kind, s, t))
            out << ' ' << m.at(s, t).str() << " |";
          else
            out << "  |";
        }
        out << '\n';
      }
      if (opts.column_sum_footer) {
        out << "| H |";
        for (int s = 1; s <= dims.cols; ++s) out << ' ' << m.column_sum(s).str() << " |";
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

inline CountMatrix parse_csv_table(std::string_view text, TableDims dims) {
  CountMatrix m(dims);
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "s,t,value") throw std::invalid_argument("missing csv header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("malformed csv line: " + line);
    const int s = std::stoi(line.substr(0, c1));
    const int t = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
    m.at(s, t) = from_decimal(std::string_view(line).substr(c2 + 1));
  }
  return m;
}

inline CountMatrix parse_json_table(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  CountMatrix m(TableDims(j.at("dims").at("rows").get<int>(), j.at("dims").at("cols").get<int>()));
  for (const auto& e : j.at("entries"))
    m.at(e.at(0).get<int>(), e.at(1).get<int>()) = from_decimal(e.at(2).get<std::string>());
  return m;
}

/// (index, value) listing; csv is "n,value".
inline std::string render_sequence(std::string_view target, int m,
                                   const std::vector<BigCount>& values, OutputFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ',' << values[i].str() << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["target"] = std::string(target);
      j["m"] = m;
      auto arr = nlohmann::ordered_json::array();
      for (const auto& v : values) arr.push_back(v.str());
      j["values"] = std::move(arr);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::markdown:
      out << "| n | value |\n|---:|---:|\n";
      for (std::size_t i = 0; i < values.size(); ++i)
        out << "| " << i + 1 << " | " << values[i].str() << " |\n";
      break;
  }
  return out.str();
}

inline constexpr std::string_view kEmptyWord = "ε";

inline std::string render_words(const std::vector<LatticeWord>& words, OutputFormat fmt) {
  auto spell = [](const LatticeWord& w) {
    return w.empty() ? std::string(kEmptyWord) : w.spelling();
  };
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::csv:
      out << "word,rows\n";
      for (const auto& w : words) out << spell(w) << ',' << row_word(w) << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["count"] = words.size();
      auto arr = nlohmann::ordered_json::array();
      for (const auto& w : words) arr.push_back({{"word", spell(w)}, {"rows", row_trace(w)}});
      j["words"] = std::move(arr);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::markdown:
      for (const auto& w : words) out << spell(w) << '\n';
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Verification reports

inline nlohmann::ordered_json to_json(const verify::Domain& d) {
  nlohmann::ordered_json j;
  j["rows"] = {d.rows.lo, d.rows.hi};
  j["cols"] = {d.cols.lo, d.cols.hi};
  j["y"] = {d.y.lo, d.y.hi};
  j["span"] = {d.span.lo, d.span.hi};
  j["span_slack"] = d.span_slack;
  j["cap"] = d.cap;
  return j;
}

inline std::string params_string(const verify::Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

inline nlohmann::ordered_json to_json(const verify::IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = std::string(verify::name(r.spec.id));
  j["expected"] = std::string(verify::name(r.spec.expected));
  j["domain"] = to_json(r.spec.domain);
  j["cases_checked"] = r.cases_checked;
  j["failures"] = r.failures;
  if (r.first_counterexample) {
    nlohmann::ordered_json params;
    for (const auto& [k, v] : r.first_counterexample->params) params[k] = v;
    j["first_counterexample"] = {{"params", params},
                                 {"lhs", r.first_counterexample->lhs.str()},
                                 {"rhs", r.first_counterexample->rhs.str()}};
  } else {
    j["first_counterexample"] = nullptr;
  }
  j["verdict"] = std::string(verify::name(r.verdict));
  return j;
}

inline std::string render_reports(const std::vector<verify::IdentityReport>& reports,
                                  OutputFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      j["reports"] = std::move(arr);
      j["ok"] = verify::all_meet_expectation(reports);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "identity,expected,cases_checked,failures,verdict,counterexample,lhs,rhs\n";
      for (const auto& r : reports) {
        out << verify::name(r.spec.id) << ',' << verify::name(r.spec.expected) << ','
            << r.cases_checked << ',' << r.failures << ',' << verify::name(r.verdict) << ',';
        if (r.first_counterexample)
          out << params_string(r.first_counterexample->params) << ','
              << r.first_counterexample->lhs.str() << ',' << r.first_counterexample->rhs.str();
        else
          out << ",,";
        out << '\n';
      }
      break;
    case OutputFormat::markdown:
      out << "| identity | expected | cases | failures | verdict | first counterexample |\n"
          << "|---|---|---:|---:|---|---|\n";
      for (const auto& r : reports) {
        out << "| " << verify::name(r.spec.id) << " | " << verify::name(r.spec.expected) << " | "
            << r.cases_checked << " | " << r.failures << " | " << verify::name(r.verdict) << " | ";
        if (r.first_counterexample)
          out << params_string(r.first_counterexample->params)
              << " lhs=" << r.first_counterexample->lhs.str()
              << " rhs=" << r.first_counterexample->rhs.str();
        out << " |\n";
      }
      break;
  }
  return out.str();
}

inline std::string render_calibration(const verify::Calibration& c, OutputFormat fmt) {
  std::ostringstream out;
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  switch (fmt) {
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["identity"] = std::string(verify::name(c.id));
      j["dependent"] = c.dependent;
      auto arr = nlohmann::ordered_json::array();
      for (const auto& p : c.frontier) {
        nlohmann::ordered_json e;
        e["m"] = p.m;
        e["max_valid"] = p.max_valid ? nlohmann::ordered_json(*p.max_valid) : nlohmann::ordered_json(nullptr);
        e["first_failure"] =
            p.first_failure ? nlohmann::ordered_json(*p.first_failure) : nlohmann::ordered_json(nullptr);
        e["box_limit"] = p.box_limit;
        arr.push_back(e);
      }
      j["frontier"] = std::move(arr);
      if (c.failure_law)
        j["failure_law"] = {{"slope", c.failure_law->slope}, {"intercept", c.failure_law->intercept}};
      else
        j["failure_law"] = nullptr;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "m,max_valid,first_failure,box_limit\n";
      for (const auto& p : c.frontier)
        out << p.m << ',' << opt(p.max_valid) << ',' << opt(p.first_failure) << ',' << p.box_limit
            << '\n';
      break;
    case OutputFormat::markdown:
      out << "| m | max valid " << c.dependent << " | first failing " << c.dependent
          << " | box limit |\n|---:|---:|---:|---:|\n";
      for (const auto& p : c.frontier)
        out << "| " << p.m << " | " << opt(p.max_valid) << " | " << opt(p.first_failure) << " | "
            << p.box_limit << " |\n";
      if (c.failure_law)
        out << "\nfirst failure at " << c.dependent << " = " << c.failure_law->slope << "*m + "
            << c.failure_law->intercept << '\n';
      break;
  }
  return out.str();
}

}  // namespace latpath::io
