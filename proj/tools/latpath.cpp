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

#include "latpath/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace latpath::cli;

  CLI::App app{"Exact counts of lattice paths inside an m x n table (steps u, r, d)"};
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Render D^1, D, A or H over the whole table");
  table_cmd->add_option("--kind", table.kind, "d1 | d | a | h")->required();
  table_cmd->add_option("-m,--rows", table.rows, "Rows")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("-n,--cols", table.cols, "Columns")->required()->check(CLI::PositiveNumber);
  table_cmd->add_flag("--footer", table.footer, "Append column sums H(s,m) (markdown)");
  add_format(table_cmd, table.format);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Paths between two blanks of the table");
  count_cmd->add_option("-m,--rows", count.rows, "Rows")->required();
  count_cmd->add_option("-n,--cols", count.cols, "Columns")->required();
  count_cmd->add_option("--from-col", count.from.col)->required();
  count_cmd->add_option("--from-row", count.from.row)->required();
  count_cmd->add_option("--to-col", count.to.col)->required();
  count_cmd->add_option("--to-row", count.to.row)->required();

  SequenceArgs seq;
  auto* seq_cmd = app.add_subcommand("sequence", "I_m(1..N) or D^1(1..N, 1)");
  seq_cmd->add_option("--target", seq.target, "imn-fixed-m | d1-bottom-row")->required();
  seq_cmd->add_option("-m,--rows", seq.m, "Rows")->required();
  seq_cmd->add_option("--max-n", seq.max_n, "Last column")->required();
  add_format(seq_cmd, seq.format);

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check identities against the DP and the oracle");
  ver_cmd->add_option("--identity", ver.identity, "Identity id or 'all'");
  ver_cmd->add_option("-m,--rows", ver.rows, "Pin m to a single value");
  ver_cmd->add_option("-n,--cols", ver.cols, "Pin n to a single value");
  ver_cmd->add_option("--max-rows", ver.max_rows);
  ver_cmd->add_option("--max-cols", ver.max_cols);
  ver_cmd->add_option("--max-y", ver.max_y);
  ver_cmd->add_option("--max-span", ver.max_span);
  ver_cmd->add_option("--span-slack", ver.span_slack);
  ver_cmd->add_option("--cap", ver.cap, "Oracle word-length cap (overrides $LATPATH_CAP)");
  ver_cmd->add_flag("--calibrate", ver.calibrate, "Report the exact validity frontier instead");
  add_format(ver_cmd, ver.format);

  WordsArgs words;
  auto* words_cmd = app.add_subcommand("words", "Enumerate lattice words (brute force)");
  words_cmd->add_option("--length", words.length)->required();
  words_cmd->add_option("--start", words.start, "Start row");
  words_cmd->add_option("--end-row", words.end_row);
  words_cmd->add_option("--net", words.net, "Net displacement #u - #d");
  words_cmd->add_option("--floor", words.floor);
  words_cmd->add_option("--ceiling", words.ceiling);
  words_cmd->add_option("-m,--rows", words.rows, "Confine to rows [1,m]");
  words_cmd->add_option("--alphabet", words.alphabet, "Subset of 'urd'");
  words_cmd->add_option("--cap", words.cap, "Word-length cap (overrides $LATPATH_CAP)");
  add_format(words_cmd, words.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  CommandResult result;
  if (*table_cmd)
    result = cmd_table(table);
  else if (*count_cmd)
    result = cmd_count(count);
  else if (*seq_cmd)
    result = cmd_sequence(seq);
  else if (*ver_cmd)
    result = cmd_verify(ver);
  else
    result = cmd_words(words);

  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
