#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "squarestat/analyze.hpp"

namespace squarestat {

/// Exhaustive-scan configuration. With canonical_only set (the default)
/// only words whose distinct letters first appear in alphabet order are
/// enumerated; every audit is invariant under alphabet permutation, so the
/// reduction loses nothing and shrinks the space by up to sigma!.
struct ScanConfig {
  int alphabet_size = 2;  // 2..4
  int min_len = 1;
  int max_len = 1;
  CheckSet checks = CheckSet::all();
  bool canonical_only = true;
  int jobs = 1;
  long long counterexample_budget = -1;  // <0: record all
  ClassifyOptions classify;

  void validate() const {
    if (alphabet_size < 2 || alphabet_size > 4) {
      throw std::domain_error("alphabet size must be between 2 and 4");
    }
    if (min_len < 1 || max_len < min_len) {
      throw std::domain_error("need 1 <= min length <= max length");
    }
    if (jobs < 1) throw std::domain_error("need at least one worker");
  }
};

struct Counterexample {
  std::string word;
  std::string check;
  std::string context;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

/// Per-length extremal row: the largest double-square count and distinct
/// count seen, with the lexicographically first witnesses.
struct LengthStat {
  int n = 0;
  std::uint64_t words = 0;
  int max_delta = 0;
  std::string delta_witness;
  int max_distinct = 0;
  std::string distinct_witness;
};

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

struct ScanReport {
  ScanConfig config;
  std::uint64_t words_scanned = 0;
  bool complete = true;
  std::vector<LengthStat> per_length;
  std::map<std::string, Tally> tallies;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return counterexamples.empty() && complete; }
};

namespace detail {

struct ScanTask {
  int n = 0;
  std::string prefix;
  int used = 0;  // distinct letters in the prefix
};

struct PartialReport {
  std::uint64_t words = 0;
  std::map<std::string, Tally> tallies;
  std::vector<Counterexample> counterexamples;
  // extremal for this task's single length
  int max_delta = -1;
  std::string delta_witness;
  int max_distinct = -1;
  std::string distinct_witness;
};

/// Visits every word of length n over {'a'..}, restricted to canonical
/// form when canonical is set, continuing a fixed prefix.
template <class Visit>
void enumerate_words(std::string& buf, std::size_t pos, int used, int sigma,
                     bool canonical, Visit&& visit) {
  if (pos == buf.size()) {
    visit(std::string_view(buf));
    return;
  }
  int limit = canonical ? std::min(sigma, used + 1) : sigma;
  for (int c = 0; c < limit; ++c) {
    buf[pos] = static_cast<char>('a' + c);
    enumerate_words(buf, pos + 1, std::max(used, c + 1), sigma, canonical, visit);
  }
}

inline void run_task(const ScanTask& task, const ScanConfig& config,
                     Analyzer& analyzer, PartialReport& out,
                     std::atomic<long long>* budget_left) {
  std::string buf = task.prefix;
  buf.resize(static_cast<std::size_t>(task.n), 'a');
  auto names = config.checks.names();
  enumerate_words(
      buf, task.prefix.size(), task.used, config.alphabet_size,
      config.canonical_only, [&](std::string_view w) {
        if (budget_left && budget_left->load(std::memory_order_relaxed) <= 0) return;
        const Analyzer::Result& r = analyzer.run(w, config.checks, config.classify);
        out.words += 1;
        for (const auto& name : names) out.tallies[name].checked += 1;
        for (const Failure& f : r.failures) {
          out.tallies[f.check].failed += 1;
          out.counterexamples.push_back({std::string(w), f.check, f.context});
          if (budget_left) budget_left->fetch_sub(1, std::memory_order_relaxed);
        }
        if (r.stats.delta > out.max_delta) {
          out.max_delta = r.stats.delta;
          out.delta_witness = std::string(w);
        }
        if (r.stats.distinct > out.max_distinct) {
          out.max_distinct = r.stats.distinct;
          out.distinct_witness = std::string(w);
        }
      });
}

}  // namespace detail

/// Runs the configured exhaustive scan. The word space splits into
/// prefix-block tasks processed by a fixed worker pool; partial results
/// merge in task order, so the report is identical for any worker count.
inline ScanReport scan(const ScanConfig& config) {
  config.validate();
  ScanReport report;
  report.config = config;

  // Prefix length per task: enough blocks to balance, still coarse enough
  // to keep per-task overhead negligible.
  std::vector<detail::ScanTask> tasks;
  for (int n = config.min_len; n <= config.max_len; ++n) {
    int depth = 0;
    if (config.jobs > 1) {
      long long blocks = 1;
      while (depth < n - 1 && blocks < 64LL * config.jobs) {
        blocks *= config.alphabet_size;
        ++depth;
      }
    }
    std::string buf(static_cast<std::size_t>(depth), 'a');
    if (depth == 0) {
      tasks.push_back({n, "", 0});
    } else {
      detail::enumerate_words(buf, 0, 0, config.alphabet_size,
                              config.canonical_only, [&](std::string_view prefix) {
                                int used = 0;
                                for (char c : prefix) used = std::max(used, c - 'a' + 1);
                                tasks.push_back({n, std::string(prefix), used});
                              });
    }
  }

  std::vector<detail::PartialReport> partials(tasks.size());
  std::atomic<long long> budget_left{config.counterexample_budget < 0
                                         ? std::numeric_limits<long long>::max()
                                         : config.counterexample_budget};
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    Analyzer analyzer;
    for (;;) {
      std::size_t idx = next.fetch_add(1, std::memory_order_relaxed);
      if (idx >= tasks.size()) break;
      detail::run_task(tasks[idx], config, analyzer, partials[idx], &budget_left);
    }
  };
  if (config.jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(config.jobs));
    for (int i = 0; i < config.jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // deterministic merge in task order
  std::map<int, LengthStat> per_length;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const detail::PartialReport& p = partials[i];
    report.words_scanned += p.words;
    for (const auto& [k, v] : p.tallies) {
      report.tallies[k].checked += v.checked;
      report.tallies[k].failed += v.failed;
    }
    for (const auto& ce : p.counterexamples) report.counterexamples.push_back(ce);
    LengthStat& stat = per_length[tasks[i].n];
    stat.n = tasks[i].n;
    stat.words += p.words;
    if (p.max_delta > stat.max_delta ||
        (p.max_delta == stat.max_delta && !p.delta_witness.empty() &&
         (stat.delta_witness.empty() || p.delta_witness < stat.delta_witness))) {
      stat.max_delta = std::max(p.max_delta, 0);
      stat.delta_witness = p.delta_witness;
    }
    if (p.max_distinct > stat.max_distinct ||
        (p.max_distinct == stat.max_distinct && !p.distinct_witness.empty() &&
         (stat.distinct_witness.empty() || p.distinct_witness < stat.distinct_witness))) {
      stat.max_distinct = std::max(p.max_distinct, 0);
      stat.distinct_witness = p.distinct_witness;
    }
  }
  for (auto& [n, stat] : per_length) report.per_length.push_back(stat);
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return std::tie(a.word, a.check, a.context) <
                     std::tie(b.word, b.check, b.context);
            });
  if (config.counterexample_budget >= 0 &&
      budget_left.load() <= 0) {
    report.complete = false;
    if (static_cast<long long>(report.counterexamples.size()) >
        config.counterexample_budget) {
      report.counterexamples.resize(
          static_cast<std::size_t>(config.counterexample_budget));
    }
  }
  return report;
}

}  // namespace squarestat
