// Acceptance suite: runs every verification target at full size and prints
// one pass/fail line per criterion. Exit code 0 only when all pass.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "squarestat/report.hpp"
#include "squarestat/squarestat.hpp"
#include "squarestat/toolsuites.hpp"

using namespace squarestat;

namespace {

int g_failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int id, const std::string& label, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

ScanReport run_scan(int sigma, int max_len) {
  ScanConfig config;
  config.alphabet_size = sigma;
  config.min_len = 1;
  config.max_len = max_len;
  config.jobs = 4;
  config.checks = CheckSet::all();
  return scan(config);
}

std::uint64_t expected_canonical(int sigma, int max_len) {
  // sum over n and over the number k of distinct letters actually used of
  // the Stirling subset numbers S(n, k)
  std::uint64_t total = 0;
  for (int n = 1; n <= max_len; ++n) {
    std::vector<std::vector<std::uint64_t>> s(
        static_cast<std::size_t>(n) + 1,
        std::vector<std::uint64_t>(static_cast<std::size_t>(sigma) + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
      for (int k = 1; k <= sigma; ++k) {
        s[i][k] = s[i - 1][k - 1] + static_cast<std::uint64_t>(k) * s[i - 1][k];
      }
    }
    for (int k = 1; k <= sigma; ++k) total += s[static_cast<std::size_t>(n)][k];
  }
  return total;
}

ScanReport g_binary_scan, g_ternary_scan;

void criterion1() {
  Timer t;
  g_binary_scan = run_scan(2, 20);
  bool pass = g_binary_scan.passed() &&
              g_binary_scan.words_scanned == expected_canonical(2, 20);
  std::ostringstream d;
  d << g_binary_scan.words_scanned << " canonical words, "
    << g_binary_scan.counterexamples.size() << " counterexamples, " << t.seconds()
    << "s";
  report(1, "exhaustive binary scan n<=20, all audits", pass, d.str());
}

void criterion2() {
  Timer t;
  g_ternary_scan = run_scan(3, 13);
  bool pass = g_ternary_scan.passed() &&
              g_ternary_scan.words_scanned == expected_canonical(3, 13);
  std::ostringstream d;
  d << g_ternary_scan.words_scanned << " canonical words, "
    << g_ternary_scan.counterexamples.size() << " counterexamples, " << t.seconds()
    << "s";
  report(2, "exhaustive ternary scan n<=13, all audits", pass, d.str());
}

void criterion3() {
  bool pass = true;
  std::string detail;
  {
    std::string w = "aabaaabaabaaab";
    auto pos = fs_positions(w);
    pass &= pos == std::vector<FsPosition>{{0, 4, 7}};
    if (pass) {
      FsDoubleSquare fs = canonical_factorization(w, 0, 4, 7);
      pass &= fs.generator(w).str() == "aab" && fs.prefix_part(w).str() == "a" &&
              fs.e1 == 1 && fs.e2 == 1 && fs.start == 0;
    }
    if (!pass) detail = "fig-1 factorization mismatch";
  }
  if (pass) {
    std::string w = "aabbaaabbaabbaaabb";
    FsDoubleSquare fs = canonical_factorization(w, 0, 5, 9);
    // 1-based core positions 5 and 14
    pass &= fs.p(w).str() == "a" && fs.s(w).str() == "" &&
            fs.start + fs.core_pos1() + 1 == 5 && fs.start + fs.core_pos2() + 1 == 14 &&
            fs.core(w).str() == "aaa";
    if (!pass) detail = "fig-2 cores mismatch";
  }
  if (pass) {
    std::string w = "aabaabaaabaabaabaaaba";
    auto pos = fs_positions(w);
    pass &= pos.size() == 2;
    if (pass) {
      auto u = canonical_factorization(w, pos[0].start, pos[0].u_len, pos[0].U_len);
      auto v = canonical_factorization(w, pos[1].start, pos[1].u_len, pos[1].U_len);
      pass &= classify(w, u, v).kind == MateKind::alpha;
    }
    if (!pass) detail = "fig-3 alpha classification mismatch";
  }
  if (pass) {
    std::string w = "aabaabaabaaabaabaabaabaaabaab";
    auto pos = fs_positions(w);
    pass &= pos.size() == 3 && pos[0].start == 0 && pos[2].start == 3;
    if (pass) {
      auto u = canonical_factorization(w, pos[0].start, pos[0].u_len, pos[0].U_len);
      auto v = canonical_factorization(w, pos[2].start, pos[2].u_len, pos[2].U_len);
      pass &= classify(w, u, v).kind == MateKind::beta;
    }
    if (!pass) detail = "fig-4 beta classification mismatch";
  }
  report(3, "golden figure tests, exact match", pass, detail);
}

void criterion4() {
  Timer t;
  // the scans of criteria 1-2 already audit every core (fsds group)
  bool pass = true;
  std::uint64_t scanned_failures = 0;
  for (const ScanReport* r : {&g_binary_scan, &g_ternary_scan}) {
    auto it = r->tallies.find("fsds");
    pass &= it != r->tallies.end() && it->second.failed == 0;
    if (it != r->tallies.end()) scanned_failures += it->second.failed;
  }
  int audited = 0;
  Analyzer analyzer;
  for (int j = 2; j <= 30 && pass; ++j) {
    Word q = generate_Q(j);
    const auto& res = analyzer.run(q, CheckSet::all());
    pass &= res.failures.empty();
    for (const FsDoubleSquare& fs : res.fs) {
      pass &= core_conjugacy_audit(q, fs);
      ++audited;
    }
  }
  std::ostringstream d;
  d << "scan core failures " << scanned_failures << ", Q_j double squares audited "
    << audited << ", " << t.seconds() << "s";
  report(4, "core-of-interrupt audit on scans and Q_j, j<=30", pass, d.str());
}

void criterion5() {
  Timer t;
  SuiteResult fw = fine_wilf_suite(16);
  SuiteResult sync = synchronization_suite(14, 3);
  SuiteResult lcb = longest_common_border_suite(14, 3);
  SuiteResult tsq = three_squares_suite(18);
  bool pass = fw.passed() && sync.passed() && lcb.passed() && tsq.passed();
  std::ostringstream d;
  d << "fine-wilf " << fw.words << "w/" << fw.violations << "v, sync " << sync.words
    << "w/" << sync.violations << "v, lcb " << lcb.words << "w/" << lcb.violations
    << "v, three-squares " << tsq.words << "w/" << tsq.violations << "v, "
    << t.seconds() << "s";
  report(5, "tool-lemma exhaustive suites", pass, d.str());
}

void criterion6() {
  Timer t;
  std::mt19937 rng(20260809);
  std::uniform_int_distribution<int> len(1, 200);
  std::uniform_int_distribution<int> sigma(2, 4);
  bool pass = true;
  for (int it = 0; it < 1000 && pass; ++it) {
    int n = len(rng);
    std::uniform_int_distribution<int> sym(0, sigma(rng) - 1);
    std::string w(static_cast<std::size_t>(n), 'a');
    for (char& c : w) c = static_cast<char>('a' + sym(rng));
    pass &= square_occurrences(w) == square_occurrences_naive(w);
  }
  std::ostringstream d;
  d << "1000 seeded words, " << t.seconds() << "s";
  report(6, "optimized enumeration equals the naive oracle", pass, d.str());
}

void criterion7() {
  bool pass = true;
  std::uint64_t checked = 0;
  for (const ScanReport* r : {&g_binary_scan, &g_ternary_scan}) {
    auto it = r->tallies.find("induction");
    pass &= it != r->tallies.end() && it->second.failed == 0 && it->second.checked > 0;
    if (it != r->tallies.end()) checked += it->second.checked;
  }
  std::ostringstream d;
  d << checked << " words audited";
  report(7, "backward-induction audit across both scans", pass, d.str());
}

void criterion8() {
  Timer t;
  bool pass = true;
  std::string detail;
  for (int j = 1; j <= 30 && pass; ++j) {
    if (static_cast<long long>(generate_Q(j).size()) != q_word_length(j)) {
      pass = false;
      detail = "length mismatch at j=" + std::to_string(j);
    }
  }
  Analyzer analyzer;
  for (int j = 2; j <= 30 && pass; ++j) {
    Word q = generate_Q(j);
    const auto& res = analyzer.run(q, CheckSet::parse("fsds"));
    bool shape = false;
    for (const FsDoubleSquare& fs : res.fs) shape |= matches_fs_word_shape(q, fs);
    if (res.fs.empty() || !shape) {
      pass = false;
      detail = "missing double square or shape at j=" + std::to_string(j);
    }
  }
  if (pass) {
    double prev = -1.0;
    for (int j : {5, 10, 20, 30}) {
      Word q = generate_Q(j);
      int distinct = distinct_squares(q).count();  // content-keyed oracle
      double ratio = static_cast<double>(distinct) / static_cast<double>(q.size());
      if (ratio <= prev) {
        pass = false;
        detail = "ratio not increasing at j=" + std::to_string(j);
      }
      prev = ratio;
    }
  }
  std::ostringstream d;
  if (!detail.empty()) d << detail << ", ";
  d << t.seconds() << "s";
  report(8, "Q_j suite: lengths, double squares, oracle ratio growth", pass, d.str());
}

void criterion9() {
  Timer t;
  bool pass = true;
  for (auto [sigma, max_len] : {std::pair{2, 12}, std::pair{3, 9}}) {
    std::string outputs[3];
    int idx = 0;
    for (int jobs : {1, 4, 8}) {
      ScanConfig config;
      config.alphabet_size = sigma;
      config.max_len = max_len;
      config.jobs = jobs;
      std::ostringstream os;
      render_scan(os, scan(config), OutputFormat::jsonl);
      outputs[idx++] = os.str();
    }
    pass &= outputs[0] == outputs[1] && outputs[1] == outputs[2];
  }
  std::ostringstream d;
  d << "jobs {1,4,8}, " << t.seconds() << "s";
  report(9, "byte-identical scan reports across worker counts", pass, d.str());
}

}  // namespace

int main() {
  Timer total;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT")
            << " (" << total.seconds() << "s total)" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
