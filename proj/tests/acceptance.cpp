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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any selected criterion fails. Pass a criterion number to run
// just that one.

#include "latpath/cli.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace latpath;

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++misses_;
    if (misses_ <= 6) notes_.push_back(what);
  }

  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    expect(got == want, s.str());
  }

  void time_limit(double ms, double limit_ms) {
    std::ostringstream s;
    s << "runtime " << ms << " ms over " << limit_ms << " ms";
    expect(ms < limit_ms, s.str());
  }

  bool ok() const { return misses_ == 0; }

  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (misses_ > 0) {
      s << ", " << misses_ << " mismatched";
      for (const auto& n : notes_) s << "; " << n;
    }
    return s.str();
  }

 private:
  int checks_ = 0;
  int misses_ = 0;
  std::vector<std::string> notes_;
};

struct GoldenRow {
  int t;
  int first_s;
  std::vector<int> values;
};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

CountMatrix table_via_cli(const std::string& kind, int rows, int cols) {
  const auto r = cli::cmd_table({kind, rows, cols, "csv", false});
  if (r.exit_code != cli::kExitOk) throw std::runtime_error("table command failed: " + r.err);
  return io::parse_csv_table(r.out, TableDims(rows, cols));
}

void check_golden(Checker& c, const CountMatrix& m, const std::vector<GoldenRow>& golden,
                  const std::string& label) {
  for (const auto& row : golden)
    for (std::size_t k = 0; k < row.values.size(); ++k) {
      const int s = row.first_s + static_cast<int>(k);
      c.equal(m.at(s, row.t), row.values[k],
              label + "(" + std::to_string(s) + "," + std::to_string(row.t) + ")");
    }
}

std::string criterion_1(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<GoldenRow> d1_golden{
      {8, 8, {1}},
      {7, 7, {1, 7}},
      {6, 6, {1, 6, 27}},
      {5, 5, {1, 5, 20, 70}},
      {4, 4, {1, 4, 14, 44, 133}},
      {3, 3, {1, 3, 9, 25, 69, 189}},
      {2, 2, {1, 2, 5, 12, 30, 76, 196}},
      {1, 1, {1, 1, 2, 4, 9, 21, 51, 127}},
  };
  const std::vector<GoldenRow> a_golden{
      {8, 8, {1}},
      {7, 7, {1, 0}},
      {6, 6, {1, 0, 6}},
      {5, 5, {1, 0, 5, 0}},
      {4, 4, {1, 0, 4, 0, 14}},
      {3, 3, {1, 0, 3, 0, 9, 0}},
      {2, 2, {1, 0, 2, 0, 5, 0, 14}},
      {1, 1, {1, 0, 1, 0, 2, 0, 5, 0}},
  };
  check_golden(c, table_via_cli("d1", 8, 8), d1_golden, "D1");
  check_golden(c, table_via_cli("a", 8, 8), a_golden, "A");
  c.time_limit(elapsed_ms(start), 1000);
  return "8x8 confined and up/down tables";
}

std::string criterion_2(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<GoldenRow> golden{
      {5, 5, {1, 5, 19, 63, 195, 579}},
      {4, 4, {1, 4, 14, 44, 133, 384, 1096}},
      {3, 3, {1, 3, 9, 25, 69, 189, 517, 1413}},
      {2, 2, {1, 2, 5, 12, 30, 76, 196, 512, 1352}},
      {1, 1, {1, 1, 2, 4, 9, 21, 51, 127, 323, 835}},
  };
  const std::vector<int> footer{1, 2, 5, 13, 36, 95, 259, 708, 1931, 5275};

  check_golden(c, table_via_cli("d1", 5, 10), golden, "D1");

  const auto md = cli::cmd_table({"d1", 5, 10, "markdown", true});
  c.equal(md.exit_code, cli::kExitOk, "markdown exit code");
  const auto pos = md.out.find("| H |");
  c.expect(pos != std::string::npos, "footer row present");
  if (pos != std::string::npos) {
    std::istringstream in(md.out.substr(pos + 5));
    for (int s = 1; s <= 10; ++s) {
      std::string cell, bar;
      in >> cell >> bar;
      c.equal(cell, std::to_string(footer[s - 1]), "H(" + std::to_string(s) + ")");
    }
  }
  c.time_limit(elapsed_ms(start), 1000);
  return "5-row confined table with column-sum footer";
}

std::string criterion_3(Checker& c) {
  const auto start = std::chrono::steady_clock::now();

  // D^1(8,4) from up/down counts
  std::vector<std::pair<BigCount, BigCount>> terms;
  BigCount sum = 0;
  for (int i = 0; 4 + 2 * i <= 8; ++i) {
    terms.emplace_back(closed::binomial(7, 8 - 4 - 2 * i), closed::a_closed(4 + 2 * i, 4));
    sum += terms.back().first * terms.back().second;
  }
  const std::vector<std::pair<BigCount, BigCount>> theorem_terms{{35, 1}, {21, 4}, {1, 14}};
  c.expect(terms == theorem_terms, "D1(8,4) terms 35*1 + 21*4 + 1*14");
  c.equal(sum, 133, "D1(8,4) sum");
  c.equal(closed::d1_via_a(8, 4), 133, "d1_via_a(8,4)");
  c.equal(dp::di_table(TableDims(8, 8), 1).at(8, 4), 133, "D1(8,4) by DP");

  // D^1(9,5) split at column 5 in the 5-row table
  const closed::ConfinedD1 d1(5, 10);
  terms.clear();
  sum = 0;
  for (int i = 1; i <= 5; ++i) {
    terms.emplace_back(d1(5, i), d1(5, 5 - i + 1));
    sum += terms.back().first * terms.back().second;
  }
  const std::vector<std::pair<BigCount, BigCount>> split_terms{
      {9, 1}, {12, 4}, {9, 9}, {4, 12}, {1, 9}};
  c.expect(terms == split_terms, "D1(9,5) terms 9*1 + 12*4 + 9*9 + 4*12 + 1*9");
  c.equal(sum, 195, "D1(9,5) sum");
  c.equal(closed::d1_split(9, 5, 5, d1), 195, "d1_split(9,5,5)");
  c.equal(d1(9, 5), 195, "D1(9,5) by DP");

  // H(9,5) from the 9x9 square
  const BigCount square = dp::d_table(TableDims(9, 9)).at(9, 9);
  c.equal(square, 2123, "D(9,9)");
  terms.clear();
  BigCount correction = 0;
  for (int i = 5; i <= 8; ++i) {
    terms.emplace_back(pow3(8 - i), d1(i, 5));
    correction += terms.back().first * terms.back().second;
  }
  const std::vector<std::pair<BigCount, BigCount>> h_terms{{27, 1}, {9, 5}, {3, 19}, {1, 63}};
  c.expect(terms == h_terms, "H(9,5) corrections 27*1 + 9*5 + 3*19 + 1*63");
  c.equal(square - correction, 1931, "H(9,5) difference");
  c.equal(closed::h_via_square(9, 5), 1931, "h_via_square(9,5)");
  c.equal(dp::h_table(TableDims(5, 9)).at(9, 5), 1931, "H(9,5) by DP");

  c.time_limit(elapsed_ms(start), 1000);
  return "three worked decompositions";
}

std::string criterion_4(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  BigCount total = 0;
  for (int from = 1; from <= 2; ++from)
    for (int to = 1; to <= 2; ++to) {
      const auto r = cli::cmd_count({2, 3, {1, from}, {3, to}});
      c.equal(r.exit_code, cli::kExitOk, "count exit code");
      total += from_decimal(r.out.substr(0, r.out.find('\n')));
    }
  c.equal(total, 8, "sum of count over entry/exit rows");

  const auto seq = cli::cmd_sequence({"imn-fixed-m", 2, 3, "csv"});
  c.expect(seq.out.ends_with("3,8\n"), "sequence reports I_2(3) = 8");

  std::multiset<std::string> row_words;
  for (int from = 1; from <= 2; ++from) {
    cli::WordsArgs a;
    a.length = 2;
    a.rows = 2;
    a.start = from;
    a.format = "csv";
    const auto r = cli::cmd_words(a);
    c.equal(r.exit_code, cli::kExitOk, "words exit code");
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) row_words.insert(line.substr(line.find(',') + 1));
  }
  const std::multiset<std::string> expected{"111", "112", "121", "122",
                                            "222", "221", "212", "211"};
  c.expect(row_words == expected, "row-words are exactly 111,112,121,122,222,221,212,211");
  c.equal(oracle::brute_imn(TableDims(2, 3)), 8, "brute-force I_2(3)");
  c.time_limit(elapsed_ms(start), 1000);
  return "I_2(3) in the 2x3 table";
}

std::string criterion_5(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  cli::VerifyArgs a;
  a.format = "json";
  const auto r = cli::cmd_verify(a);
  const double ms = elapsed_ms(start);
  c.equal(r.exit_code, cli::kExitOk, "verify exit code");
  const auto j = nlohmann::json::parse(r.out);
  const std::set<std::string> must_pass{"A-CLOSED", "D1-VIA-A",   "D1-CLOSED", "D1-SPLIT",
                                        "D-BOUNDARY", "INNER-PRODUCT", "H-SQUARE", "S-FREE",
                                        "S2",        "FLIP-SYMMETRY", "REVERSAL"};
  std::set<std::string> seen;
  for (const auto& rep : j.at("reports")) {
    const auto id = rep.at("identity").get<std::string>();
    if (!must_pass.contains(id)) continue;
    seen.insert(id);
    c.equal(rep.at("verdict").get<std::string>(), "PASS", id + " verdict");
    c.equal(rep.at("failures").get<int>(), 0, id + " failures");
    c.expect(rep.at("cases_checked").get<int>() > 0, id + " checked no cases");
  }
  c.expect(seen == must_pass, "every listed identity was run");
  c.expect(j.at("ok").get<bool>(), "suite ok");
  c.time_limit(ms, 60000);
  return "default identity suite";
}

std::string criterion_6(Checker& c) {
  const auto reports = verify::run_suite({verify::default_spec(verify::IdentityId::d_boundary_printed),
                                          verify::default_spec(verify::IdentityId::s_free_printed)});
  for (const auto& r : reports) {
    const std::string id(verify::name(r.spec.id));
    c.equal(verify::name(r.verdict), "DOCUMENTED-FAILURE-CONFIRMED", id + " verdict");
    c.expect(r.first_counterexample.has_value(), id + " stores a counterexample");
  }

  const TableDims dims(2, 3);
  const BigCount truth = dp::d_table(dims).at(3, 1);
  c.equal(truth, 4, "D(3,1) in 2x3 by DP");
  c.equal(oracle::brute_pair_count(dims, {1, 1}, {3, 1}) + oracle::brute_pair_count(dims, {1, 2}, {3, 1}),
          4, "D(3,1) in 2x3 by brute force");
  c.equal(closed::printed::d_boundary(dims, 3, 1), 8, "printed D(3,1) in 2x3");
  c.equal(closed::d_boundary(dims, 3, 1), 4, "corrected D(3,1) in 2x3");

  verify::Domain box;
  box.rows = {1, 6};
  box.cols = {1, 14};
  const auto cal = verify::calibrate_domain(verify::IdentityId::h_square, box);
  c.expect(cal.covers([](int m) { return m; }, [](int m) { return 2 * m; }),
           "calibrated H-SQUARE domain contains m <= n <= 2m");
  for (const auto& p : cal.frontier)
    c.expect(!p.max_valid || *p.max_valid >= std::min(2 * p.m, p.box_limit),
             "frontier at m=" + std::to_string(p.m));
  return "printed variants and H-SQUARE calibration";
}

std::string criterion_7(Checker& c) {
  const std::vector<int> motzkin{1, 1, 2, 4, 9, 21, 51, 127};
  for (int m = 1; m <= 10; ++m) {
    const CountMatrix d1 = dp::di_table(TableDims(m, 8), 1);
    for (int s = 1; s <= std::min(m, 8); ++s)
      c.equal(d1.at(s, 1), motzkin[s - 1], "m=" + std::to_string(m) + " D1(" + std::to_string(s) + ",1)");
  }
  const std::vector<int> catalan{1, 1, 2, 5, 14};
  const CountMatrix a = dp::a_table(9);
  for (int k = 0; k <= 4; ++k) {
    c.equal(a.at(2 * k + 1, 1), catalan[k], "A(" + std::to_string(2 * k + 1) + ",1)");
    c.equal(closed::a_closed(2 * k + 1, 1), catalan[k], "closed A(" + std::to_string(2 * k + 1) + ",1)");
  }
  return "Motzkin and Catalan edges";
}

std::string criterion_8(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  for (int y = 0; y <= 12; ++y) {
    BigCount total = 0;
    for (int x = -y; x <= y; ++x) total += dp::free_count(x, y);
    c.equal(total, pow3(y), "sum of free counts at y=" + std::to_string(y));
  }
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      const TableDims dims(m, n);
      for (int c1 = 1; c1 <= n; ++c1)
        for (int c2 = c1; c2 <= n; ++c2)
          for (int r1 = 1; r1 <= m; ++r1)
            for (int r2 = 1; r2 <= m; ++r2) {
              const Cell from{c1, r1}, to{c2, r2};
              c.expect(oracle::brute_pair_count(dims, from, to) == dp::bounded_pair_count(dims, from, to),
                       "pair count mismatch in " + std::to_string(m) + "x" + std::to_string(n));
            }
    }
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 9; ++n) {
      const TableDims dims(m, n);
      const BigCount total = dp::imn(dims);
      for (int a = 1; a <= n; ++a)
        c.expect(closed::i_inner(dims, a) == total,
                 "i_inner varies at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                     " a=" + std::to_string(a));
    }
  c.time_limit(elapsed_ms(start), 60000);
  return "free-count totals, brute/DP agreement, split invariance";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<std::string(Checker&)>> criteria{
      criterion_1, criterion_2, criterion_3, criterion_4,
      criterion_5, criterion_6, criterion_7, criterion_8};

  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria.size())) {
      std::cerr << "usage: acceptance [1-" << criteria.size() << "]\n";
      return 2;
    }
  }

  bool all_ok = true;
  for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) {
    if (only && i != only) continue;
    Checker c;
    std::string title;
    const auto start = std::chrono::steady_clock::now();
    try {
      title = criteria[i - 1](c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double ms = elapsed_ms(start);
    all_ok = all_ok && c.ok();
    std::cout << (c.ok() ? "[PASS]" : "[FAIL]") << " criterion " << i << ": " << title << " ("
              << c.summary() << "; " << static_cast<long>(ms) << " ms)\n";
  }
  return all_ok ? 0 : 1;
}
