#pragma once

#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "squarestat/mates.hpp"
#include "squarestat/squares.hpp"

namespace squarestat {

/// Which audits a scan or analysis runs. Group names (for --checks):
/// delta, distinct, pairs, fsds, exhaustivity, three-squares, induction,
/// bounds, all.
struct CheckSet {
  bool delta_bound = true;
  bool distinct_bound = true;
  bool pair_starts = true;
  bool fs_structure = true;
  bool exhaustivity = true;
  bool three_squares = true;
  bool induction = true;
  bool bounds = true;

  static CheckSet all() { return CheckSet{}; }

  static CheckSet none() {
    CheckSet c;
    c.delta_bound = c.distinct_bound = c.pair_starts = c.fs_structure = false;
    c.exhaustivity = c.three_squares = c.induction = c.bounds = false;
    return c;
  }

  bool needs_fs() const {
    return fs_structure || exhaustivity || induction || bounds;
  }

  /// Parses a comma-separated group list; throws on unknown names.
  static CheckSet parse(std::string_view list) {
    if (list.empty() || list == "all") return all();
    CheckSet c = none();
    std::size_t pos = 0;
    while (pos <= list.size()) {
      std::size_t comma = list.find(',', pos);
      if (comma == std::string_view::npos) comma = list.size();
      std::string_view name = list.substr(pos, comma - pos);
      if (name == "delta") c.delta_bound = true;
      else if (name == "distinct") c.distinct_bound = true;
      else if (name == "pairs") c.pair_starts = true;
      else if (name == "fsds") c.fs_structure = true;
      else if (name == "exhaustivity") c.exhaustivity = true;
      else if (name == "three-squares") c.three_squares = true;
      else if (name == "induction") c.induction = true;
      else if (name == "bounds") c.bounds = true;
      else if (name == "all") c = all();
      else if (!name.empty())
        throw std::domain_error("unknown check group: " + std::string(name));
      pos = comma + 1;
    }
    return c;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (delta_bound) out.push_back("delta");
    if (distinct_bound) out.push_back("distinct");
    if (pair_starts) out.push_back("pairs");
    if (fs_structure) out.push_back("fsds");
    if (exhaustivity) out.push_back("exhaustivity");
    if (three_squares) out.push_back("three-squares");
    if (induction) out.push_back("induction");
    if (bounds) out.push_back("bounds");
    return out;
  }
};

/// One failed check on one word.
struct Failure {
  std::string check;
  std::string context;
};

/// Per-word verification engine with reusable buffers; one instance per
/// worker thread. Words up to a few thousand symbols (quadratic tables).
class Analyzer {
 public:
  struct Stats {
    int n = 0;
    int delta = 0;
    int distinct = 0;
  };

  struct Result {
    Stats stats;
    std::vector<FsPosition> fs_raw;
    std::vector<FsDoubleSquare> fs;  // factorized (skips failed entries)
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
  };

  static constexpr int kMaxLength = 5000;

  const Result& run(std::string_view w, const CheckSet& checks,
                    ClassifyOptions opts = {}) {
    const int n = static_cast<int>(w.size());
    if (n > kMaxLength) {
      throw std::domain_error("word too long for quadratic analysis");
    }
    result_.stats = {n, 0, 0};
    result_.fs_raw.clear();
    result_.fs.clear();
    result_.failures.clear();
    lce_.assign(w);
    detect_squares(w, checks);
    if (checks.three_squares) check_three_squares(w);
    if (checks.delta_bound && 2 * result_.stats.delta > n) {
      fail("delta", "fs double squares " + std::to_string(result_.stats.delta) +
                        " exceed half of n=" + std::to_string(n));
    }
    if (checks.distinct_bound && n > 0 && 2 * result_.stats.distinct >= 3 * n) {
      fail("distinct", "distinct squares " + std::to_string(result_.stats.distinct) +
                           " reach 3/2 of n=" + std::to_string(n));
    }
    if (!result_.fs_raw.empty() && checks.needs_fs()) run_fs_checks(w, checks, opts);
    return result_;
  }

  const LceTable& lce() const { return lce_; }

 private:
  void fail(std::string_view check, std::string context) {
    result_.failures.push_back({std::string(check), std::move(context)});
  }

  void detect_squares(std::string_view w, const CheckSet& checks) {
    const int n = static_cast<int>(w.size());
    int fs_start = -1, fs_count = 0, fs_min = 0, fs_max = 0;
    auto flush = [&]() {
      if (fs_count >= 2) {
        result_.fs_raw.push_back({fs_start, fs_min, fs_max});
        result_.stats.delta += 1;
        if (fs_count > 2 && checks.pair_starts) {
          fail("pairs", std::to_string(fs_count) +
                            " last-occurrence squares share start " +
                            std::to_string(fs_start));
        }
      }
    };
    for (int i = 0; i < n; ++i) {
      fs_start = i;
      fs_count = 0;
      for (int len = 1; i + 2 * len <= n; ++len) {
        if (lce_(i, i + len) < len) continue;
        bool last = true;
        for (int j = i + 1; j + 2 * len <= n; ++j) {
          if (lce_(i, j) >= 2 * len) {
            last = false;
            break;
          }
        }
        if (!last) continue;
        result_.stats.distinct += 1;
        if (fs_count == 0) fs_min = len;
        fs_max = len;
        ++fs_count;
      }
      flush();
    }
  }

  void check_three_squares(std::string_view w) {
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
      roots_.clear();
      for (int len = 1; i + 2 * len <= n; ++len) {
        if (lce_(i, i + len) >= len) roots_.push_back(len);
      }
      if (roots_.size() < 3) continue;
      // ascending roots: any violation shows up against the next root
      for (std::size_t a = 0; a + 2 < roots_.size(); ++a) {
        if (!lce_.factor_is_primitive(i, roots_[a])) continue;
        for (std::size_t b = a + 1; b + 1 < roots_.size(); ++b) {
          if (roots_[a] + roots_[b] > roots_[b + 1]) {
            fail("three-squares",
                 "suffix " + std::to_string(i) + ": roots " +
                     std::to_string(roots_[a]) + "," + std::to_string(roots_[b]) +
                     "," + std::to_string(roots_[b + 1]));
            return;
          }
        }
      }
    }
  }

  void run_fs_checks(std::string_view w, const CheckSet& checks,
                     ClassifyOptions opts) {
    for (const FsPosition& pos : result_.fs_raw) {
      try {
        FsDoubleSquare fs = canonical_factorization(w, pos.start, pos.u_len, pos.U_len);
        if (checks.fs_structure) {
          if (2 * fs.U_len < 10) {
            fail("fsds", "double square at " + std::to_string(fs.start) +
                             " shorter than 10");
          }
          if (fs.p_len + fs.s_len > fs.gen_len - 2) {
            fail("fsds", "|p|+|s| exceeds |gen|-2 at " + std::to_string(fs.start));
          }
          if (enumerate_factorizations(w, pos.start, pos.u_len, pos.U_len).size() != 1) {
            fail("fsds", "factorization not unique at " + std::to_string(fs.start));
          }
          try {
            interrupt_core(w, fs);
          } catch (const std::domain_error& e) {
            fail("fsds", std::string(e.what()) + " at " + std::to_string(fs.start));
          }
          try {
            if (!core_conjugacy_audit(w, fs)) {
              fail("fsds", "core window is a conjugate of the generator at " +
                               std::to_string(fs.start));
            }
          } catch (const std::domain_error& e) {
            fail("fsds", std::string(e.what()) + " at " + std::to_string(fs.start));
          }
        }
        result_.fs.push_back(fs);
      } catch (const std::domain_error& e) {
        fail("fsds", "factorization failed at " + std::to_string(pos.start) +
                         ": " + e.what());
      }
    }
    std::span<const FsDoubleSquare> fs(result_.fs);
    if (checks.exhaustivity) {
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
          if (classify(w, fs[i], fs[j], opts).kind == MateKind::unclassified) {
            fail("exhaustivity",
                 "pair " + std::to_string(fs[i].start) + "/" +
                     std::to_string(fs[j].start) + " matches no mate kind");
          }
        }
      }
    }
    if (checks.induction) {
      InductionResult ind = induction_audit(w, fs, opts);
      if (!ind.ok) fail("induction", ind.context);
    }
    if (checks.bounds) {
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (const AuditResult& a : bound_audits(w, fs.subspan(i), opts)) {
          if (!a.pass) {
            std::ostringstream ctx;
            ctx << a.id << " at U start " << a.u_start;
            if (a.v_start >= 0) ctx << ", V start " << a.v_start;
            ctx << " (0-based), measured=" << a.measured << " bound=" << a.bound;
            fail("bounds", ctx.str());
          }
        }
      }
    }
  }

  LceTable lce_;
  std::vector<int> roots_;
  Result result_;
};

/// Full per-word report: squares, the distinct index size, double squares
/// with factorizations, every pairwise mate classification, the leading
/// family, the per-suffix bound audits, and any check failures.
struct MatePairReport {
  int u_start = 0;
  int v_start = 0;
  MateClassification classification;
  long long gap = 0;
  long long tail = 0;  // clamped at 0 for nested pairs
};

struct WordAnalysis {
  Word word;
  std::vector<SquareOccurrence> squares;
  std::vector<SquareOccurrence> last_squares;
  int distinct = 0;
  std::vector<FsPosition> positions;
  std::vector<FsDoubleSquare> fs;
  std::vector<MatePairReport> mates;
  FamilyReport family;
  std::vector<AuditResult> audits;
  InductionResult induction;
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

inline WordAnalysis analyze(const Word& w, const CheckSet& checks = CheckSet::all(),
                            ClassifyOptions opts = {}) {
  WordAnalysis out;
  out.word = w;
  Analyzer analyzer;
  const Analyzer::Result& r = analyzer.run(w, checks, opts);
  out.distinct = r.stats.distinct;
  out.positions = r.fs_raw;
  out.fs = r.fs;
  out.failures = r.failures;
  out.squares = square_occurrences(w);
  out.last_squares = last_occurrences(w);
  std::span<const FsDoubleSquare> fs(out.fs);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      MatePairReport pair;
      pair.u_start = fs[i].start;
      pair.v_start = fs[j].start;
      pair.classification = classify(w, fs[i], fs[j], opts);
      pair.gap = fs[j].start - fs[i].start;
      pair.tail = std::max<long long>(tail_len(fs[i], fs[j]), 0);
      out.mates.push_back(pair);
    }
    for (const AuditResult& a : bound_audits(w, fs.subspan(i), opts)) {
      out.audits.push_back(a);
    }
  }
  out.family = family(w, fs, opts);
  out.induction = induction_audit(w, fs, opts);
  return out;
}

}  // namespace squarestat
