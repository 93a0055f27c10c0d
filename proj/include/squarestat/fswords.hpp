#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "squarestat/analyze.hpp"

namespace squarestat {

/// Block i of the Fraenkel-Simpson family: 0^(i+1) 1 0^i 1 0^(i+1) 1,
/// of length 3i+5.
inline Word generate_q(int i) {
  if (i < 1) throw std::domain_error("generate_q: need i >= 1");
  std::string out;
  out.reserve(3 * static_cast<std::size_t>(i) + 5);
  out.append(static_cast<std::size_t>(i) + 1, '0');
  out.push_back('1');
  out.append(static_cast<std::size_t>(i), '0');
  out.push_back('1');
  out.append(static_cast<std::size_t>(i) + 1, '0');
  out.push_back('1');
  return Word(std::move(out));
}

/// Q_j = q_1 q_2 ... q_j, of length 3j(j+1)/2 + 5j. The family's
/// distinct-square density grows toward 1 with j.
inline Word generate_Q(int j) {
  if (j < 1) throw std::domain_error("generate_Q: need j >= 1");
  std::string out;
  for (int i = 1; i <= j; ++i) out.append(generate_q(i).str());
  return Word(std::move(out));
}

/// Closed-form length of Q_j.
inline long long q_word_length(int j) {
  return 3LL * j * (j + 1) / 2 + 5LL * j;
}

/// A double square whose factorization matches the family's documented
/// shape: generator 0^a 1 0^b (a >= 1), prefix part "0", both exponents 1.
inline bool matches_fs_word_shape(std::string_view w, const FsDoubleSquare& fs) {
  if (fs.e1 != 1 || fs.e2 != 1 || fs.pre_len != 1) return false;
  std::string_view gen = w.substr(static_cast<std::size_t>(fs.start) + fs.u_len,
                                  static_cast<std::size_t>(fs.gen_len));
  if (gen.front() != '0') return false;
  int ones = 0;
  for (char c : gen) {
    if (c == '1') ++ones;
    else if (c != '0') return false;
  }
  std::string_view pre = w.substr(
      static_cast<std::size_t>(fs.start) + fs.e1 * fs.gen_len, 1);
  return ones == 1 && pre == "0";
}

struct FsWordReport {
  int j = 0;
  Word word;
  long long length = 0;
  int distinct = 0;
  double ratio = 0.0;
  std::vector<FsDoubleSquare> fs;
  std::vector<int> shape_matches;  // starts of double squares matching the shape
  std::vector<Failure> failures;   // audit failures, expected empty
};

/// Analyzes Q_j: distinct-square count, every double square with its
/// factorization, which of them match the family's documented shape, and
/// the full audit outcome.
inline FsWordReport fsword_report(int j, const CheckSet& checks = CheckSet::all()) {
  FsWordReport out;
  out.j = j;
  out.word = generate_Q(j);
  out.length = static_cast<long long>(out.word.size());
  Analyzer analyzer;
  const Analyzer::Result& r = analyzer.run(out.word, checks);
  out.distinct = r.stats.distinct;
  out.ratio = out.length ? static_cast<double>(out.distinct) / static_cast<double>(out.length)
                         : 0.0;
  out.fs = r.fs;
  out.failures = r.failures;
  for (const FsDoubleSquare& fs : out.fs) {
    if (matches_fs_word_shape(out.word, fs)) out.shape_matches.push_back(fs.start);
  }
  return out;
}

}  // namespace squarestat
