#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "squarestat/fs_core.hpp"
#include "squarestat/word.hpp"

namespace squarestat {

/// How a later FS double square relates to an earlier one. The first four
/// kinds start inside the earlier short root; the last three start at or
/// after its end, split by the window and length conditions below.
enum class MateKind {
  alpha,    // |v| = |u|, |V| = |U|
  beta,     // |v| < |u|, |V| = |U|
  gamma,    // |v| = |U|
  delta,    // |v| > |U|
  epsilon,  // |v| <= |gen|, v[1] ends inside the traced extension of U^2
  eta,      // |v| = n|gen| (n >= 2), v[1] ends before u gen^(e1+e2-1) p
  zeta,     // everything else after u[1]
  unclassified,  // a close mate matching none of the length relations
};

inline std::string_view mate_kind_name(MateKind k) {
  switch (k) {
    case MateKind::alpha: return "alpha";
    case MateKind::beta: return "beta";
    case MateKind::gamma: return "gamma";
    case MateKind::delta: return "delta";
    case MateKind::epsilon: return "epsilon";
    case MateKind::eta: return "eta";
    case MateKind::zeta: return "zeta";
    case MateKind::unclassified: return "unclassified";
  }
  return "?";
}

/// Window strictness for the epsilon/eta end conditions. The paper-style
/// reading is the default; the inclusive variant widens both windows by one
/// position for boundary-sensitivity experiments.
struct ClassifyOptions {
  bool inclusive_windows = false;
};

struct MateClassification {
  MateKind kind = MateKind::unclassified;
  std::optional<int> beta_t;                  // shrink index
  std::optional<std::pair<int, int>> gamma_tk;  // canonical start / prefix power
  std::optional<int> eta_n;                   // |v| / |gen|
};

namespace detail {

inline void append_power(std::string& out, std::string_view unit, int count) {
  for (int i = 0; i < count; ++i) out.append(unit);
}

/// Canonical-shape witness for a gamma-mate: integers (t, k) such that the
/// mate's generator is a^(e1-t) ptilde a^(e2+t-k) and its prefix part is
/// a^k, for a the length-|gen| factor anchored at the mate's start.
inline std::optional<std::pair<int, int>> gamma_witness(std::string_view w,
                                                        const FsDoubleSquare& U,
                                                        const FsDoubleSquare& V,
                                                        bool require_inequalities) {
  const int gl = U.gen_len;
  if (V.e1 != 1 || V.e2 != 1) return std::nullopt;
  if (V.pre_len % gl != 0) return std::nullopt;
  const int k = V.pre_len / gl;
  std::string anchor(w.substr(V.start, gl));
  std::string expect;
  for (int i = 0; i < k; ++i) expect.append(anchor);
  if (w.substr(V.start + V.gen_len, V.pre_len) != expect) return std::nullopt;
  std::string ptilde = anchor.substr(0, U.pre_len);
  for (int t = 0; t <= U.e1; ++t) {
    int a = U.e1 - t;
    int b = U.e2 + t - k;
    if (a < 1 || b < 0) continue;
    if (require_inequalities && !(U.e1 - t > k && k > U.e2 && t > k - U.e2)) continue;
    if (a * gl + U.pre_len + b * gl != V.gen_len) continue;
    expect.clear();
    append_power(expect, anchor, a);
    expect.append(ptilde);
    append_power(expect, anchor, b);
    if (w.substr(V.start, V.gen_len) == expect) return std::make_pair(t, k);
  }
  return std::nullopt;
}

}  // namespace detail

/// Assigns the later double square V its kind relative to U by the
/// start-window / length decision tree. The close/far boundary sits at the
/// last symbol of u[1]: strictly before it is close, at or after it is far.
inline MateClassification classify(std::string_view w, const FsDoubleSquare& U,
                                   const FsDoubleSquare& V,
                                   ClassifyOptions opts = {}) {
  MateClassification out;
  const int rel = V.start - U.start;
  if (rel <= 0) throw std::domain_error("classify: V must start after U");
  if (rel < U.u_len - 1) {
    if (V.u_len == U.u_len && V.U_len == U.U_len) {
      out.kind = MateKind::alpha;
    } else if (V.u_len < U.u_len && V.U_len == U.U_len) {
      out.kind = MateKind::beta;
      int t = U.e1 - V.e1;
      if (t >= 1 && V.gen_len == U.gen_len && V.e2 == U.e2 + t) out.beta_t = t;
    } else if (V.u_len == U.U_len) {
      out.kind = MateKind::gamma;
      out.gamma_tk = detail::gamma_witness(w, U, V, /*require_inequalities=*/false);
    } else if (V.u_len > U.U_len) {
      out.kind = MateKind::delta;
    } else {
      out.kind = MateKind::unclassified;
    }
    return out;
  }
  const int slack = opts.inclusive_windows ? 1 : 0;
  const long long end0 = rel + V.u_len;  // exclusive end of v[1], relative to U
  const long long eps_end = 2LL * U.U_len +
                            static_cast<long long>(U.trace) * U.gen_len +
                            U.lcp_gen_resid;
  if (V.u_len <= U.gen_len && end0 <= eps_end + slack) {
    out.kind = MateKind::epsilon;
    return out;
  }
  const long long eta_end = static_cast<long long>(U.u_len) +
                            static_cast<long long>(U.e1 + U.e2 - 1) * U.gen_len +
                            U.p_len;
  if (V.u_len % U.gen_len == 0 && V.u_len / U.gen_len >= 2 &&
      end0 < eta_end + slack) {
    out.kind = MateKind::eta;
    out.eta_n = V.u_len / U.gen_len;
    return out;
  }
  out.kind = MateKind::zeta;
  return out;
}

/// Gap and tail of an ordered pair: u t = g v on the host word. When V is
/// nested inside u (|g| + |v| < |u|) the tail is empty and `nested` is set;
/// the configuration falls outside the tail bounds' premises.
struct GapTail {
  Word gap;
  Word tail;
  bool nested = false;
};

inline long long tail_len(const FsDoubleSquare& U, const FsDoubleSquare& V) {
  return static_cast<long long>(V.start - U.start) + V.u_len - U.u_len;
}

inline GapTail gap_tail(std::string_view w, const FsDoubleSquare& U,
                        const FsDoubleSquare& V) {
  if (V.start < U.start) throw std::domain_error("gap_tail: V starts before U");
  GapTail out;
  out.gap = Word(std::string(w.substr(U.start, V.start - U.start)));
  long long t = tail_len(U, V);
  if (t < 0) {
    out.nested = true;
  } else {
    out.tail = Word(std::string(w.substr(U.start + U.u_len, static_cast<std::size_t>(t))));
  }
  return out;
}

/// Number of double squares starting in [s(U), s(V)): U counts, V does not.
inline int d_count(std::span<const FsDoubleSquare> fs, const FsDoubleSquare& U,
                   const FsDoubleSquare& V) {
  int d = 0;
  for (const auto& f : fs) {
    if (f.start >= U.start && f.start < V.start) ++d;
  }
  return d;
}

enum class FamilyRegime { no_beta_no_eta, eta_no_beta, has_beta };

inline std::string_view family_regime_name(FamilyRegime r) {
  switch (r) {
    case FamilyRegime::no_beta_no_eta: return "no-beta-no-eta";
    case FamilyRegime::eta_no_beta: return "eta-no-beta";
    case FamilyRegime::has_beta: return "has-beta";
  }
  return "?";
}

/// The family of the leading double square: the regime picks which kinds
/// belong, members are those mates starting before the first double square
/// of a non-family kind. d and T are taken against that first outsider.
struct FamilyReport {
  FamilyRegime regime = FamilyRegime::no_beta_no_eta;
  std::vector<std::pair<FsDoubleSquare, std::optional<MateClassification>>> members;
  std::optional<FsDoubleSquare> first_non_family;
  std::optional<int> d;
  std::optional<long long> tail;      // |T|
  std::optional<long long> margin2;   // 2 d - |T|
};

inline FamilyReport family(std::string_view w,
                           std::span<const FsDoubleSquare> fs_from_u,
                           ClassifyOptions opts = {}) {
  FamilyReport out;
  if (fs_from_u.empty()) return out;
  const FsDoubleSquare& U = fs_from_u.front();
  std::vector<MateClassification> kinds;
  kinds.reserve(fs_from_u.size() - 1);
  bool has_beta = false, has_eta = false;
  for (std::size_t i = 1; i < fs_from_u.size(); ++i) {
    kinds.push_back(classify(w, U, fs_from_u[i], opts));
    has_beta |= kinds.back().kind == MateKind::beta;
    has_eta |= kinds.back().kind == MateKind::eta;
  }
  out.regime = has_beta ? FamilyRegime::has_beta
               : has_eta ? FamilyRegime::eta_no_beta
                         : FamilyRegime::no_beta_no_eta;
  auto in_family = [&](MateKind k) {
    switch (out.regime) {
      case FamilyRegime::no_beta_no_eta:
        return k == MateKind::alpha || k == MateKind::gamma;
      case FamilyRegime::eta_no_beta:
        return k == MateKind::alpha || k == MateKind::epsilon || k == MateKind::eta;
      case FamilyRegime::has_beta:
        return k == MateKind::alpha || k == MateKind::beta || k == MateKind::gamma ||
               k == MateKind::epsilon || k == MateKind::eta;
    }
    return false;
  };
  std::size_t first = fs_from_u.size();
  for (std::size_t i = 1; i < fs_from_u.size(); ++i) {
    if (!in_family(kinds[i - 1].kind)) {
      first = i;
      break;
    }
  }
  out.members.emplace_back(U, std::nullopt);
  for (std::size_t i = 1; i < first; ++i) {
    out.members.emplace_back(fs_from_u[i], kinds[i - 1]);
  }
  if (first < fs_from_u.size()) {
    const FsDoubleSquare& V = fs_from_u[first];
    out.first_non_family = V;
    out.d = d_count(fs_from_u, U, V);
    long long t = std::max<long long>(tail_len(U, V), 0);
    out.tail = t;
    out.margin2 = 2LL * *out.d - t;
  }
  return out;
}

/// Outcome of the backward-induction audit; `context` names the first
/// failing suffix when ok is false.
struct InductionResult {
  bool ok = true;
  std::string context;
};

/// Walks every suffix that begins with a double square (the double-square
/// list of such a suffix is exactly the tail of the host's list) and checks
/// the per-suffix count bound plus the family dichotomy: without outsiders
/// 2 delta <= |suffix| - |u| must already hold, otherwise the first
/// outsider V must satisfy 2 d(U,V) - |T(U,V)| <= 0.
inline InductionResult induction_audit(std::string_view w,
                                       std::span<const FsDoubleSquare> fs,
                                       ClassifyOptions opts = {}) {
  const long long n = static_cast<long long>(w.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const FsDoubleSquare& U = fs[i];
    const long long delta = static_cast<long long>(fs.size() - i);
    const long long suffix_len = n - U.start;
    if (2 * delta > suffix_len - U.u_len) {
      return {false, "suffix-bound at start " + std::to_string(U.start)};
    }
    FamilyReport fam = family(w, fs.subspan(i), opts);
    if (fam.first_non_family && *fam.margin2 > 0) {
      return {false, "dichotomy at start " + std::to_string(U.start) +
                         " vs " + std::to_string(fam.first_non_family->start) +
                         " (2d-T=" + std::to_string(*fam.margin2) + ")"};
    }
  }
  return {true, {}};
}

/// One verified inequality or structural statement: the measured quantity,
/// the instantiated bound, and the mates involved.
struct AuditResult {
  std::string id;
  bool pass = true;
  long long measured = 0;
  long long bound = 0;
  int u_start = 0;
  int v_start = -1;
};

namespace detail {

/// True when some eta-mate of U carries the exact canonical factorization
/// gen^(n-1) pre with prefix part suf. The frame-sensitive eta bounds are
/// audited only for hosts that have such a mate.
inline bool canonical_eta_present(std::string_view w, const FsDoubleSquare& U,
                                  std::span<const FsDoubleSquare> fs_tail,
                                  const std::vector<MateClassification>& kinds) {
  std::string gen(w.substr(U.start + U.u_len, U.gen_len));
  for (std::size_t i = 1; i < fs_tail.size(); ++i) {
    if (kinds[i].kind != MateKind::eta) continue;
    const FsDoubleSquare& V = fs_tail[i];
    int m = *kinds[i].eta_n;
    std::string expect;
    append_power(expect, gen, m - 1);
    expect.append(w.substr(U.start + U.e1 * U.gen_len, U.pre_len));
    if (w.substr(V.start, V.gen_len) == expect &&
        V.pre_len == U.suf_len() &&
        w.substr(V.start + V.e1 * V.gen_len, V.pre_len) ==
            w.substr(U.start + U.u_len + U.pre_len, U.suf_len())) {
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Runs every applicable per-host bound and structure audit for the leading
/// double square of fs_tail: mate-count ceilings, tail floors, exclusions,
/// and the gamma/eta factorization shapes. Conditional statements fire only
/// when their premises hold on this host.
inline std::vector<AuditResult> bound_audits(std::string_view w,
                                             std::span<const FsDoubleSquare> fs_tail,
                                             ClassifyOptions opts = {}) {
  std::vector<AuditResult> res;
  if (fs_tail.empty()) return res;
  const FsDoubleSquare& U = fs_tail.front();
  const long long gl = U.gen_len, pl = U.p_len, sl = U.s_len, phl = U.pre_len;
  auto add = [&](std::string id, bool pass, long long measured, long long bound,
                 int v_start = -1) {
    res.push_back({std::move(id), pass, measured, bound, U.start, v_start});
  };

  std::vector<MateClassification> kinds;
  kinds.reserve(fs_tail.size());
  kinds.emplace_back();  // align indices with fs_tail
  long long nA = 0, nB = 0, nG = 0, nE = 0, nH = 0;
  for (std::size_t i = 1; i < fs_tail.size(); ++i) {
    kinds.push_back(classify(w, U, fs_tail[i], opts));
    switch (kinds.back().kind) {
      case MateKind::alpha: ++nA; break;
      case MateKind::beta: ++nB; break;
      case MateKind::gamma: ++nG; break;
      case MateKind::epsilon: ++nE; break;
      case MateKind::eta: ++nH; break;
      default: break;
    }
  }

  add("trace-bound", U.trace <= U.e1 - U.e2, U.trace, U.e1 - U.e2);
  if (U.trace == U.e1 - U.e2 && U.pre_len > 0) {
    add("trace-equality-residual", !U.resid_has_pre, U.resid_has_pre ? 1 : 0, 0);
  }

  add("alpha-count", nA <= pl, nA, pl);

  const long long half = (U.e1 - U.e2) / 2;
  long long beta_bound;
  if (U.trace > half) {
    beta_bound = half * (pl + sl + 1);
  } else {
    beta_bound = std::max<long long>(
        0, (U.trace - 1) * (pl + sl + 1) +
               std::min<long long>(U.lcp_gen_resid, pl) + sl + 1);
  }
  add("beta-count", nB <= beta_bound, nB, beta_bound);
  const long long beta_full = half * (pl + sl + 1);
  const long long beta_alt = (half - 1) * (pl + sl + 1) +
                             std::min<long long>(U.lcp_gen_resid, pl) + sl + 1;
  if (nB > 0 && (nB == beta_full || nB == beta_alt)) {
    const long long tr_cap = U.e1 - U.e2 - half;
    bool ok = U.trace <= tr_cap;
    if (ok && U.trace == tr_cap) ok = U.lcp_gen_resid < phl;
    add("beta-trace", ok, U.trace, tr_cap);
  }

  // per-mate tails and structures
  const bool canon_eta = nH > 0 && detail::canonical_eta_present(w, U, fs_tail, kinds);
  bool gamma_shape_found = false;
  for (std::size_t i = 1; i < fs_tail.size(); ++i) {
    const FsDoubleSquare& V = fs_tail[i];
    const long long tl = std::max<long long>(tail_len(U, V), 0);
    switch (kinds[i].kind) {
      case MateKind::beta: {
        bool shape = kinds[i].beta_t.has_value() &&
                     *kinds[i].beta_t <= half && *kinds[i].beta_t >= 1;
        add("beta-mate-shape", shape, kinds[i].beta_t.value_or(-1), half, V.start);
        break;
      }
      case MateKind::gamma: {
        add("gamma-exponents", V.e1 == 1 && V.e2 == 1,
            static_cast<long long>(V.e1) * 10 + V.e2, 11, V.start);
        if (detail::gamma_witness(w, U, V, /*require_inequalities=*/true)) {
          gamma_shape_found = true;
        }
        break;
      }
      case MateKind::delta: {
        add("delta-tail", tl >= U.U_len, tl, U.U_len, V.start);
        if (canon_eta) {
          const long long b = (U.e1 + U.e2 + 2) * gl + 2 * phl;
          add("delta-eta-tail", tl >= b, tl, b, V.start);
        }
        break;
      }
      case MateKind::epsilon: {
        const long long b = U.U_len + pl - 2 * gl;
        add("epsilon-tail", tl >= b, tl, b, V.start);
        break;
      }
      case MateKind::zeta: {
        const long long b = U.U_len - gl + pl;
        add("zeta-tail", tl >= b, tl, b, V.start);
        if (canon_eta) {
          for (std::size_t j = 1; j < fs_tail.size(); ++j) {
            if (kinds[j].kind != MateKind::eta) continue;
            const long long m = *kinds[j].eta_n;
            const long long b2 = (U.e1 + U.e2 + m - 1) * gl + 2 * phl - sl;
            add("zeta-eta-tail", tl >= b2, tl, b2, V.start);
          }
        }
        break;
      }
      case MateKind::eta: {
        add("eta-mate-exponent", V.e1 == 1 && V.e2 == 1,
            static_cast<long long>(V.e1) * 10 + V.e2, 11, V.start);
        // anchored factorization: gen' = a^(n-1) ptilde, pre' = stilde for
        // a the |gen|-factor at the mate's start
        const int m = *kinds[i].eta_n;
        std::string anchor(w.substr(V.start, U.gen_len));
        std::string expect;
        detail::append_power(expect, anchor, m - 1);
        expect.append(anchor.substr(0, U.pre_len));
        bool shape = w.substr(V.start, V.gen_len) == expect &&
                     V.pre_len == U.suf_len() &&
                     w.substr(V.start + V.e1 * V.gen_len, V.pre_len) ==
                         std::string_view(anchor).substr(U.pre_len);
        add("eta-mate-shape", shape, m, 0, V.start);
        bool v_beta_free = true;
        for (std::size_t j = i + 1; j < fs_tail.size(); ++j) {
          if (classify(w, V, fs_tail[j], opts).kind == MateKind::beta) {
            v_beta_free = false;
            break;
          }
        }
        add("eta-mate-no-beta", v_beta_free, v_beta_free ? 0 : 1, 0, V.start);
        if (canon_eta) {
          // canonical frame corollaries
          std::string gen(w.substr(U.start + U.u_len, U.gen_len));
          std::string canon;
          detail::append_power(canon, gen, m - 1);
          canon.append(w.substr(U.start + U.e1 * U.gen_len, U.pre_len));
          if (w.substr(V.start, V.gen_len) == canon) {
            add("eta-lcp-lcs",
                V.p_len == pl - gl + phl && V.s_len == sl &&
                    w.substr(V.start + V.u_len + V.gen_len - V.s_len, V.s_len) ==
                        w.substr(U.start + U.u_len + gl - U.s_len, U.s_len),
                V.p_len, pl - gl + phl, V.start);
          }
        }
        break;
      }
      default:
        break;
    }
  }
  if (nG > 0) {
    add("gamma-canonical-shape", gamma_shape_found, gamma_shape_found ? 1 : 0, 1);
  }
  add("gamma-excludes-epsilon", !(nG > 0 && nE > 0), nG > 0 && nE > 0 ? 1 : 0, 0);
  add("gamma-excludes-eta", !(nG > 0 && nH > 0), nG > 0 && nH > 0 ? 1 : 0, 0);

  if (canon_eta) {
    add("eta-host-exponent", U.e1 > 2, U.e1, 3);
    add("eta-prefsuf",
        lcp_len(w.substr(U.start + U.u_len, U.gen_len),
                w.substr(U.start + U.u_len + U.pre_len, U.suf_len())) ==
            static_cast<std::size_t>(U.suf_len()),
        0, 0);
    const long long b = pl + sl - gl + phl;
    add("eta-count", nH <= std::max<long long>(b, 0), nH, b);
    const long long be = 2 * gl - sl - pl;
    add("epsilon-count-eta", nE <= be, nE, be);
    const long long host_min = static_cast<long long>(U.U_len) + U.u_len + 3 * gl + phl;
    add("eta-host-length",
        static_cast<long long>(w.size()) - U.start >= host_min,
        static_cast<long long>(w.size()) - U.start, host_min);
    if (nA > 0 && nB > 0 && nE > 0) {
      const long long tot2 = 2 * (nA + nB + nE + nH);
      const long long b2 = (U.e1 - U.e2 + 3) * gl + 2 * (phl - sl);
      add("combined-count", tot2 <= b2, tot2, b2);
    }
  }
  return res;
}

}  // namespace squarestat
