#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace squarestat {

/// An immutable finite sequence of symbols over a small alphabet.
///
/// Symbols are raw byte values; textual I/O uses printable ASCII directly,
/// so "aab" and "00101001" are both valid words. All positions exposed by
/// the library are 0-based half-open ranges; reports may render 1-based.
class Word {
 public:
  Word() = default;
  explicit Word(std::string text) : text_(std::move(text)) {}

  /// Builds a word from text, rejecting non-printable symbols.
  static Word parse(std::string_view text) {
    for (unsigned char c : text) {
      if (c < 0x21 || c > 0x7e) {
        throw std::domain_error("word symbols must be printable ASCII");
      }
    }
    return Word(std::string(text));
  }

  std::size_t size() const { return text_.size(); }
  bool empty() const { return text_.empty(); }
  char operator[](std::size_t i) const { return text_[i]; }

  const std::string& str() const { return text_; }
  std::string_view view() const { return text_; }
  operator std::string_view() const { return text_; }

  /// The factor [pos, pos+len) as a new word.
  Word factor(std::size_t pos, std::size_t len) const {
    return Word(text_.substr(pos, len));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string text_;
};

inline std::size_t lcp_len(std::string_view a, std::string_view b) {
  std::size_t m = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < m && a[i] == b[i]) ++i;
  return i;
}

inline std::size_t lcs_len(std::string_view a, std::string_view b) {
  std::size_t m = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < m && a[a.size() - 1 - i] == b[b.size() - 1 - i]) ++i;
  return i;
}

/// Longest common prefix of two words, as a word.
inline Word lcp(const Word& a, const Word& b) {
  return a.factor(0, lcp_len(a, b));
}

/// Longest common suffix of two words, as a word.
inline Word lcs(const Word& a, const Word& b) {
  std::size_t k = lcs_len(a, b);
  return a.factor(a.size() - k, k);
}

/// True iff w[i] == w[i+p] for all 0 <= i < |w|-p. Accepts any p up to |w|,
/// not only p <= |w|/2; periodicity-lemma checks need the long periods too.
inline bool has_period(std::string_view w, std::size_t p) {
  if (p < 1 || p > w.size()) {
    throw std::domain_error("has_period: period out of range [1, |w|]");
  }
  for (std::size_t i = 0; i + p < w.size(); ++i) {
    if (w[i] != w[i + p]) return false;
  }
  return true;
}

/// Length of the primitive root of a nonempty word: the smallest divisor d
/// of |x| such that x is a power of its prefix of length d.
inline std::size_t primitive_root_len(std::string_view x) {
  if (x.empty()) throw std::domain_error("primitive_root: empty word");
  std::size_t n = x.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    if (has_period(x, d)) return d;
  }
  return n;
}

inline bool is_primitive(std::string_view x) {
  return primitive_root_len(x) == x.size();
}

/// A word as a power of its primitive root. The decomposition is unique;
/// root^exponent reconstructs the input exactly.
struct PrimitiveDecomposition {
  Word root;
  int exponent = 0;
};

inline PrimitiveDecomposition primitive_root(const Word& x) {
  std::size_t d = primitive_root_len(x);
  return PrimitiveDecomposition{x.factor(0, d), static_cast<int>(x.size() / d)};
}

/// Left rotation by k positions (k may exceed |x|).
inline Word rotated(const Word& x, std::size_t k) {
  if (x.empty()) return x;
  k %= x.size();
  std::string out;
  out.reserve(x.size());
  out.append(x.str(), k, x.size() - k);
  out.append(x.str(), 0, k);
  return Word(std::move(out));
}

/// All |x| rotations of x, starting with x itself. Contains duplicates
/// exactly when x is not primitive.
inline std::vector<Word> conjugates(const Word& x) {
  std::vector<Word> out;
  out.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out.push_back(rotated(x, k));
  return out;
}

/// True iff y is some rotation of x.
inline bool is_conjugate(std::string_view x, std::string_view y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  std::string doubled(x);
  doubled.append(x);
  return doubled.find(y) != std::string::npos;
}

}  // namespace squarestat
