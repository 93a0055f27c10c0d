#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "squarestat/word.hpp"

namespace squarestat {

/// Longest-common-extension answers for one word: lce(i, j) is the length
/// of the longest common prefix of the suffixes starting at i and j.
/// Quadratic memory; meant for words up to a few thousand symbols.
class LceTable {
 public:
  LceTable() = default;
  explicit LceTable(std::string_view w) { assign(w); }

  void assign(std::string_view w) {
    n_ = static_cast<int>(w.size());
    stride_ = n_ + 1;
    table_.assign(static_cast<std::size_t>(stride_) * stride_, 0);
    for (int i = n_ - 1; i >= 0; --i) {
      int32_t* row = table_.data() + static_cast<std::size_t>(i) * stride_;
      const int32_t* next = row + stride_;
      for (int j = n_ - 1; j >= 0; --j) {
        row[j] = (w[i] == w[j]) ? next[j + 1] + 1 : 0;
      }
    }
  }

  int size() const { return n_; }

  int operator()(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * stride_ + j];
  }

  /// Content equality of the factors [i, i+len) and [j, j+len).
  bool equal(int i, int j, int len) const {
    return i == j || (*this)(i, j) >= len;
  }

  /// True iff the factor [i, i+len) has period p (1 <= p <= len).
  bool factor_has_period(int i, int len, int p) const {
    return p >= len || (*this)(i, i + p) >= len - p;
  }

  /// Primitive-root length of the factor [i, i+len).
  int factor_primitive_root_len(int i, int len) const {
    for (int d = 1; d < len; ++d) {
      if (len % d == 0 && factor_has_period(i, len, d)) return d;
    }
    return len;
  }

  bool factor_is_primitive(int i, int len) const {
    return factor_primitive_root_len(i, len) == len;
  }

 private:
  int n_ = 0;
  int stride_ = 1;
  std::vector<int32_t> table_;
};

/// One square factor: the word [start, start+2*root_len) equals its own
/// second half shifted by root_len.
struct SquareOccurrence {
  int start = 0;
  int root_len = 0;
  friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
  friend auto operator<=>(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// Enumerates every square occurrence via extension queries, sorted by
/// (start, root_len).
inline std::vector<SquareOccurrence> square_occurrences(std::string_view w) {
  const int n = static_cast<int>(w.size());
  LceTable lce(w);
  std::vector<SquareOccurrence> out;
  for (int i = 0; i < n; ++i) {
    for (int len = 1; i + 2 * len <= n; ++len) {
      if (lce(i, i + len) >= len) out.push_back({i, len});
    }
  }
  return out;
}

/// Reference enumerator: direct content comparison of both halves for every
/// (start, root_len) pair. The oracle all faster paths are checked against.
inline std::vector<SquareOccurrence> square_occurrences_naive(std::string_view w) {
  const int n = static_cast<int>(w.size());
  std::vector<SquareOccurrence> out;
  for (int i = 0; i < n; ++i) {
    for (int len = 1; i + 2 * len <= n; ++len) {
      if (w.substr(i, len) == w.substr(i + len, len)) out.push_back({i, len});
    }
  }
  return out;
}

/// Distinct squares keyed by content, with the rightmost occurrence start
/// and the total occurrence count of each.
struct DistinctSquareIndex {
  struct Entry {
    int last_start = 0;
    int occurrences = 0;
  };
  std::map<Word, Entry> by_content;

  int count() const { return static_cast<int>(by_content.size()); }
};

inline DistinctSquareIndex distinct_squares(const Word& w) {
  DistinctSquareIndex index;
  for (const auto& occ : square_occurrences_naive(w)) {
    auto& entry = index.by_content[w.factor(occ.start, 2 * occ.root_len)];
    entry.last_start = occ.start;  // enumeration order makes this rightmost
    entry.occurrences += 1;
  }
  return index;
}

/// Square occurrences that are the rightmost occurrence of their content.
inline std::vector<SquareOccurrence> last_occurrences(std::string_view w) {
  const int n = static_cast<int>(w.size());
  LceTable lce(w);
  std::vector<SquareOccurrence> out;
  for (int i = 0; i < n; ++i) {
    for (int len = 1; i + 2 * len <= n; ++len) {
      if (lce(i, i + len) < len) continue;
      bool last = true;
      for (int j = i + 1; j + 2 * len <= n; ++j) {
        if (lce(i, j) >= 2 * len) {
          last = false;
          break;
        }
      }
      if (last) out.push_back({i, len});
    }
  }
  return out;
}

/// An FS double square position: two distinct squares whose rightmost
/// occurrences start together. Root lengths come out shorter-first.
struct FsPosition {
  int start = 0;
  int u_len = 0;
  int U_len = 0;
  friend bool operator==(const FsPosition&, const FsPosition&) = default;
  friend auto operator<=>(const FsPosition&, const FsPosition&) = default;
};

/// All FS double square positions of w, sorted by start. A start carrying
/// more than two last occurrences would contradict the two-squares lemma;
/// such starts are appended to *overfull (never a crash) and reported with
/// the two extreme root lengths.
inline std::vector<FsPosition> fs_positions(std::string_view w,
                                            std::vector<int>* overfull = nullptr) {
  std::vector<SquareOccurrence> lasts = last_occurrences(w);
  std::vector<FsPosition> out;
  std::size_t i = 0;
  while (i < lasts.size()) {
    std::size_t j = i;
    while (j + 1 < lasts.size() && lasts[j + 1].start == lasts[i].start) ++j;
    std::size_t k = j - i + 1;
    if (k >= 2) {
      out.push_back({lasts[i].start, lasts[i].root_len, lasts[j].root_len});
      if (k > 2 && overfull) overfull->push_back(lasts[i].start);
    }
    i = j + 1;
  }
  return out;
}

/// Witness for a three-squares violation: square prefixes with primitive
/// shortest root where |u1| + |u2| > |u3|.
struct ThreeSquaresViolation {
  int suffix = 0;
  int u1 = 0, u2 = 0, u3 = 0;
};

/// Checks the three-squares inequality on every suffix of w: among square
/// prefixes u1^2, u2^2, u3^2 with u1 primitive and |u1| < |u2| < |u3|,
/// |u1| + |u2| <= |u3| must hold.
inline bool three_squares_audit(std::string_view w,
                                ThreeSquaresViolation* out = nullptr) {
  const int n = static_cast<int>(w.size());
  LceTable lce(w);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    roots.clear();
    for (int len = 1; i + 2 * len <= n; ++len) {
      if (lce(i, i + len) >= len) roots.push_back(len);
    }
    for (std::size_t a = 0; a < roots.size(); ++a) {
      if (!lce.factor_is_primitive(i, roots[a])) continue;
      for (std::size_t b = a + 1; b < roots.size(); ++b) {
        for (std::size_t c = b + 1; c < roots.size(); ++c) {
          if (roots[a] + roots[b] > roots[c]) {
            if (out) *out = {i, roots[a], roots[b], roots[c]};
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace squarestat
