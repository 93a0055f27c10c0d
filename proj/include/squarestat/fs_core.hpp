#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "squarestat/squares.hpp"
#include "squarestat/word.hpp"

namespace squarestat {

/// An FS double square (u, U) at `start` in a host word, together with its
/// canonical factorization u = gen^e1 pre, U = gen^e1 pre gen^e2 (gen
/// primitive, pre a proper prefix of gen, e1 >= e2 >= 1) and the derived
/// interrupt data. Lengths index into the host word; the content accessors
/// take the host because the record itself stays small.
struct FsDoubleSquare {
  int start = 0;
  int u_len = 0;
  int U_len = 0;
  int gen_len = 0;  // |gen|
  int pre_len = 0;  // |pre|
  int e1 = 0;
  int e2 = 0;
  int p_len = 0;  // |lcp(pre suf, suf pre)|, a prefix of gen
  int s_len = 0;  // |lcs(pre suf, suf pre)|, a suffix of gen
  int trace = 0;  // largest t with gen^t a prefix of the rest after U^2
  int lcp_gen_resid = 0;     // |lcp(gen, r)| for the rest r after gen^trace
  bool resid_has_pre = false;  // pre is a prefix of r

  int suf_len() const { return gen_len - pre_len; }
  int core_len() const { return s_len + p_len + 2; }
  // 0-based core starts, relative to `start`
  int core_pos1() const { return u_len - s_len - 1; }
  int core_pos2() const { return U_len + u_len - s_len - 1; }

  Word generator(std::string_view w) const {
    return Word(std::string(w.substr(start + u_len, gen_len)));
  }
  Word prefix_part(std::string_view w) const {
    return Word(std::string(w.substr(start + e1 * gen_len, pre_len)));
  }
  Word suffix_part(std::string_view w) const {
    return Word(std::string(w.substr(start + u_len + pre_len, suf_len())));
  }
  Word p(std::string_view w) const {  // prefix of gen
    return Word(std::string(w.substr(start + u_len, p_len)));
  }
  Word s(std::string_view w) const {  // suffix of gen
    return Word(std::string(w.substr(start + u_len + gen_len - s_len, s_len)));
  }
  Word core(std::string_view w) const {
    return Word(std::string(w.substr(start + core_pos1(), core_len())));
  }
  Word short_root(std::string_view w) const {
    return Word(std::string(w.substr(start, u_len)));
  }
  Word long_root(std::string_view w) const {
    return Word(std::string(w.substr(start, U_len)));
  }

  friend bool operator==(const FsDoubleSquare&, const FsDoubleSquare&) = default;
};

namespace detail {

inline bool range_eq(std::string_view w, int a, int b, int len) {
  return w.substr(a, len) == w.substr(b, len);
}

}  // namespace detail

/// Recovers the unique canonical factorization of the FS double square with
/// roots u = [start, start+u_len) and U = [start, start+U_len). The
/// generator is anchored to the text: it is the primitive root of the
/// factor U[u_len..], which the factorization lemma makes gen^e2. Throws
/// std::domain_error naming the first violated invariant when the inputs
/// are not a genuine double square.
inline FsDoubleSquare canonical_factorization(std::string_view w, int start,
                                              int u_len, int U_len) {
  const int n = static_cast<int>(w.size());
  if (start < 0 || u_len < 1 || !(u_len < U_len && U_len < 2 * u_len) ||
      start + 2 * U_len > n) {
    throw std::domain_error("factorization: roots do not fit (need u < U < 2u in w)");
  }
  if (!detail::range_eq(w, start, start + u_len, u_len)) {
    throw std::domain_error("factorization: u^2 does not occur at start");
  }
  if (!detail::range_eq(w, start, start + U_len, U_len)) {
    throw std::domain_error("factorization: U^2 does not occur at start");
  }
  FsDoubleSquare fs;
  fs.start = start;
  fs.u_len = u_len;
  fs.U_len = U_len;

  std::string_view tailRoot = w.substr(start + u_len, U_len - u_len);  // gen^e2
  fs.gen_len = static_cast<int>(primitive_root_len(tailRoot));
  fs.e2 = (U_len - u_len) / fs.gen_len;
  fs.e1 = u_len / fs.gen_len;
  fs.pre_len = u_len - fs.e1 * fs.gen_len;
  if (fs.e1 < fs.e2) {
    throw std::domain_error("factorization: first exponent smaller than second");
  }
  std::string gen(tailRoot.substr(0, fs.gen_len));
  std::string pre(w.substr(start + fs.e1 * fs.gen_len, fs.pre_len));
  if (gen.compare(0, pre.size(), pre) != 0) {
    throw std::domain_error("factorization: remainder of u is not a prefix of the generator");
  }
  std::string u_expect;
  for (int i = 0; i < fs.e1; ++i) u_expect += gen;
  u_expect += pre;
  if (u_expect != w.substr(start, u_len)) {
    throw std::domain_error("factorization: gen^e1 pre does not reconstruct u");
  }

  std::string suf = gen.substr(pre.size());
  std::string ps = pre + suf;  // == gen
  std::string sp = suf + pre;
  fs.p_len = static_cast<int>(lcp_len(ps, sp));
  fs.s_len = static_cast<int>(lcs_len(ps, sp));

  std::string_view rest = w.substr(start + 2 * U_len);
  int t = 0;
  while ((t + 1) * fs.gen_len <= static_cast<int>(rest.size()) &&
         rest.substr(t * fs.gen_len, fs.gen_len) == gen) {
    ++t;
  }
  fs.trace = t;
  std::string_view resid = rest.substr(std::min<std::size_t>(
      static_cast<std::size_t>(t) * fs.gen_len, rest.size()));
  fs.lcp_gen_resid = static_cast<int>(lcp_len(gen, resid));
  fs.resid_has_pre =
      !pre.empty() && resid.substr(0, pre.size()) == std::string_view(pre);
  return fs;
}

/// Every (gen, pre, e1, e2) tuple satisfying the factorization laws for the
/// given roots; genuine FS double squares admit exactly one.
struct FactorizationCandidate {
  Word gen;
  Word pre;
  int e1 = 0;
  int e2 = 0;
};

inline std::vector<FactorizationCandidate> enumerate_factorizations(
    std::string_view w, int start, int u_len, int U_len) {
  std::vector<FactorizationCandidate> out;
  std::string u(w.substr(start, u_len));
  std::string U(w.substr(start, U_len));
  for (int d = 1; d <= u_len; ++d) {
    std::string gen = u.substr(0, d);
    if (!is_primitive(gen)) continue;
    if ((U_len - u_len) % d != 0) continue;
    int e2 = (U_len - u_len) / d;
    for (int e1 = 1; e1 * d <= u_len; ++e1) {
      if (e1 < e2) continue;
      std::string pre = u.substr(e1 * d);
      if (static_cast<int>(pre.size()) >= d) continue;
      if (gen.compare(0, pre.size(), pre) != 0) continue;
      std::string rebuilt;
      for (int i = 0; i < e1; ++i) rebuilt += gen;
      rebuilt += pre;
      if (rebuilt != u) continue;
      for (int i = 0; i < e2; ++i) rebuilt += gen;
      if (rebuilt != U) continue;
      out.push_back({Word(gen), Word(pre), e1, e2});
    }
  }
  return out;
}

/// The cores of the interrupt: p, s, the two 0-based core positions
/// (relative to the double square's start) and the core factor itself.
struct InterruptCore {
  Word p;
  Word s;
  int pos1 = 0;  // 0-based, relative to fs.start
  int pos2 = 0;
  Word core;
};

/// Reads the interrupt data off a factorized double square and checks that
/// the factors at both core positions agree. A core longer than the
/// generator would contradict the longest-common-border lemma and is
/// reported as a domain error.
inline InterruptCore interrupt_core(std::string_view w, const FsDoubleSquare& fs) {
  if (fs.core_len() > fs.gen_len) {
    throw std::domain_error("interrupt core: |s|+|p|+2 exceeds |gen|");
  }
  InterruptCore out;
  out.p = fs.p(w);
  out.s = fs.s(w);
  out.pos1 = fs.core_pos1();
  out.pos2 = fs.core_pos2();
  out.core = fs.core(w);
  Word other(std::string(w.substr(fs.start + out.pos2, fs.core_len())));
  if (other != out.core) {
    throw std::domain_error("interrupt core: the two core factors differ");
  }
  return out;
}

/// The factor of length |gen| ending with the core and the one starting
/// with it must not be conjugates of the generator. True when both windows
/// pass; throws when the windows fall outside w.
inline bool core_conjugacy_audit(std::string_view w, const FsDoubleSquare& fs) {
  const int n = static_cast<int>(w.size());
  int core_begin = fs.start + fs.core_pos1();
  int core_end = core_begin + fs.core_len();
  int w1_begin = core_end - fs.gen_len;
  if (w1_begin < 0 || core_begin + fs.gen_len > n || core_end > n) {
    throw std::domain_error("core conjugacy: window outside the host word");
  }
  std::string_view w1 = w.substr(w1_begin, fs.gen_len);
  std::string_view w2 = w.substr(core_begin, fs.gen_len);
  std::string_view gen = w.substr(fs.start + fs.u_len, fs.gen_len);
  return !is_conjugate(gen, w1) && !is_conjugate(gen, w2);
}

}  // namespace squarestat
