#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "squarestat/squares.hpp"
#include "squarestat/word.hpp"

namespace squarestat {

/// Outcome of one exhaustive tool-lemma suite.
struct SuiteResult {
  std::string name;
  std::uint64_t words = 0;
  std::uint64_t violations = 0;
  std::string first_context;

  bool passed() const { return violations == 0; }
};

namespace detail {

template <class Visit>
void all_words(int sigma, int n, Visit&& visit) {
  std::string buf(static_cast<std::size_t>(n), 'a');
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(sigma);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = n - 1; i >= 0; --i) {
      buf[static_cast<std::size_t>(i)] = static_cast<char>('a' + c % sigma);
      c /= sigma;
    }
    visit(std::string_view(buf));
  }
}

}  // namespace detail

/// Periodicity interaction: a word with periods p and q of length at least
/// p + q - gcd(p, q) also has period gcd(p, q). Checked over every binary
/// word up to max_n and every period pair.
inline SuiteResult fine_wilf_suite(int max_n) {
  SuiteResult out;
  out.name = "fine-wilf";
  std::vector<char> periodic;
  for (int n = 1; n <= max_n; ++n) {
    detail::all_words(2, n, [&](std::string_view w) {
      out.words += 1;
      periodic.assign(static_cast<std::size_t>(n) + 1, 0);
      for (int p = 1; p <= n; ++p) {
        periodic[static_cast<std::size_t>(p)] = has_period(w, static_cast<std::size_t>(p));
      }
      for (int p = 1; p <= n; ++p) {
        if (!periodic[static_cast<std::size_t>(p)]) continue;
        for (int q = p; q <= n; ++q) {
          if (!periodic[static_cast<std::size_t>(q)]) continue;
          int g = std::gcd(p, q);
          if (n >= p + q - g && !periodic[static_cast<std::size_t>(g)]) {
            out.violations += 1;
            if (out.first_context.empty()) {
              out.first_context = std::string(w) + " periods " + std::to_string(p) +
                                  "," + std::to_string(q);
            }
          }
        }
      }
    });
  }
  return out;
}

/// Synchronization: a primitive word differs from every proper rotation of
/// itself. Checked over every primitive word up to max_n, alphabet size up
/// to sigma.
inline SuiteResult synchronization_suite(int max_n, int sigma = 3) {
  SuiteResult out;
  out.name = "synchronization";
  std::string doubled;
  for (int n = 1; n <= max_n; ++n) {
    detail::all_words(sigma, n, [&](std::string_view w) {
      if (!is_primitive(w)) return;
      out.words += 1;
      doubled.assign(w);
      doubled.append(w);
      for (int k = 1; k < n; ++k) {
        if (std::string_view(doubled).substr(static_cast<std::size_t>(k),
                                             static_cast<std::size_t>(n)) == w) {
          out.violations += 1;
          if (out.first_context.empty()) {
            out.first_context = std::string(w) + " equals its rotation by " +
                                std::to_string(k);
          }
        }
      }
    });
  }
  return out;
}

/// Longest common border: for primitive x and any proper conjugate x~,
/// |lcp(x, x~)| + |lcs(x, x~)| <= |x| - 2. Same enumeration space as the
/// synchronization suite.
inline SuiteResult longest_common_border_suite(int max_n, int sigma = 3) {
  SuiteResult out;
  out.name = "longest-common-border";
  std::string doubled;
  for (int n = 1; n <= max_n; ++n) {
    detail::all_words(sigma, n, [&](std::string_view w) {
      if (!is_primitive(w)) return;
      out.words += 1;
      doubled.assign(w);
      doubled.append(w);
      for (int k = 1; k < n; ++k) {
        std::string_view rot =
            std::string_view(doubled).substr(static_cast<std::size_t>(k),
                                             static_cast<std::size_t>(n));
        if (lcp_len(w, rot) + lcs_len(w, rot) >
            static_cast<std::size_t>(n) - 2) {
          out.violations += 1;
          if (out.first_context.empty()) {
            out.first_context = std::string(w) + " vs rotation by " +
                                std::to_string(k);
          }
        }
      }
    });
  }
  return out;
}

/// Three-squares inequality over every suffix of every binary word up to
/// max_n.
inline SuiteResult three_squares_suite(int max_n) {
  SuiteResult out;
  out.name = "three-squares";
  for (int n = 1; n <= max_n; ++n) {
    detail::all_words(2, n, [&](std::string_view w) {
      out.words += 1;
      ThreeSquaresViolation v;
      if (!three_squares_audit(w, &v)) {
        out.violations += 1;
        if (out.first_context.empty()) {
          out.first_context = std::string(w) + " suffix " + std::to_string(v.suffix) +
                              " roots " + std::to_string(v.u1) + "," +
                              std::to_string(v.u2) + "," + std::to_string(v.u3);
        }
      }
    });
  }
  return out;
}

}  // namespace squarestat
