#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "squarestat/analyze.hpp"
#include "squarestat/fswords.hpp"
#include "squarestat/scanner.hpp"

namespace squarestat {

enum class OutputFormat { human, jsonl, tsv };

inline OutputFormat parse_format(std::string_view name) {
  if (name == "human") return OutputFormat::human;
  if (name == "jsonl" || name == "json-lines") return OutputFormat::jsonl;
  if (name == "tsv") return OutputFormat::tsv;
  throw std::domain_error("unknown format: " + std::string(name));
}

namespace detail {

using json = nlohmann::json;

inline json fsds_record(std::string_view w, const FsDoubleSquare& fs) {
  return json{{"schema", 1},
              {"type", "fsds"},
              {"start", fs.start},
              {"u_len", fs.u_len},
              {"U_len", fs.U_len},
              {"generator", fs.generator(w).str()},
              {"prefix", fs.prefix_part(w).str()},
              {"e1", fs.e1},
              {"e2", fs.e2},
              {"p", fs.p(w).str()},
              {"s", fs.s(w).str()},
              {"core", fs.core(w).str()},
              {"core_pos", {fs.core_pos1(), fs.core_pos2()}},
              {"trace", fs.trace}};
}

inline void fsds_tsv(std::ostream& os, std::string_view w, const FsDoubleSquare& fs) {
  os << "fsds\t" << fs.start << '\t' << fs.u_len << '\t' << fs.U_len << '\t'
     << fs.generator(w).str() << '\t' << fs.prefix_part(w).str() << '\t' << fs.e1
     << '\t' << fs.e2 << '\t' << fs.p(w).str() << '\t' << fs.s(w).str() << '\t'
     << fs.core_pos1() << '\t' << fs.core_pos2() << '\t' << fs.trace << '\n';
}

inline void fsds_human(std::ostream& os, std::string_view w, const FsDoubleSquare& fs) {
  os << "  start " << fs.start + 1 << ": |u|=" << fs.u_len << " |U|=" << fs.U_len
     << " generator=" << fs.generator(w).str() << " prefix=" << fs.prefix_part(w).str()
     << " e1=" << fs.e1 << " e2=" << fs.e2 << " p=\"" << fs.p(w).str() << "\" s=\""
     << fs.s(w).str() << "\" cores at " << fs.start + fs.core_pos1() + 1 << ","
     << fs.start + fs.core_pos2() + 1 << " (\"" << fs.core(w).str() << "\") trace="
     << fs.trace << '\n';
}

inline json mate_record(const MatePairReport& m) {
  json rec{{"schema", 1},
           {"type", "mate"},
           {"u_start", m.u_start},
           {"v_start", m.v_start},
           {"kind", std::string(mate_kind_name(m.classification.kind))},
           {"gap", m.gap},
           {"tail", m.tail}};
  if (m.classification.beta_t) rec["beta_t"] = *m.classification.beta_t;
  if (m.classification.gamma_tk) {
    rec["gamma_t"] = m.classification.gamma_tk->first;
    rec["gamma_k"] = m.classification.gamma_tk->second;
  }
  if (m.classification.eta_n) rec["eta_n"] = *m.classification.eta_n;
  return rec;
}

}  // namespace detail

inline void render_analysis(std::ostream& os, const WordAnalysis& a,
                            OutputFormat format) {
  using detail::json;
  std::string_view w = a.word.view();
  switch (format) {
    case OutputFormat::jsonl: {
      for (const FsDoubleSquare& fs : a.fs) {
        os << detail::fsds_record(w, fs).dump() << '\n';
      }
      for (const MatePairReport& m : a.mates) {
        os << detail::mate_record(m).dump() << '\n';
      }
      if (!a.fs.empty()) {
        json members = json::array();
        for (const auto& [fs, cls] : a.family.members) members.push_back(fs.start);
        json fam{{"schema", 1},
                 {"type", "family"},
                 {"regime", std::string(family_regime_name(a.family.regime))},
                 {"members", members}};
        if (a.family.first_non_family) {
          fam["first_non_family"] = a.family.first_non_family->start;
          fam["d"] = *a.family.d;
          fam["tail"] = *a.family.tail;
        }
        os << fam.dump() << '\n';
      }
      for (const Failure& f : a.failures) {
        os << json{{"schema", 1},
                   {"type", "counterexample"},
                   {"word", a.word.str()},
                   {"check", f.check},
                   {"context", f.context}}
                  .dump()
           << '\n';
      }
      os << json{{"schema", 1},
                 {"type", "summary"},
                 {"word", a.word.str()},
                 {"length", a.word.size()},
                 {"distinct_squares", a.distinct},
                 {"fs_double_squares", a.fs.size()},
                 {"audits_pass", a.ok()}}
                .dump()
         << '\n';
      return;
    }
    case OutputFormat::tsv: {
      for (const FsDoubleSquare& fs : a.fs) detail::fsds_tsv(os, w, fs);
      for (const MatePairReport& m : a.mates) {
        os << "mate\t" << m.u_start << '\t' << m.v_start << '\t'
           << mate_kind_name(m.classification.kind) << '\t' << m.gap << '\t'
           << m.tail << '\n';
      }
      for (const Failure& f : a.failures) {
        os << "counterexample\t" << a.word.str() << '\t' << f.check << '\t'
           << f.context << '\n';
      }
      os << "summary\t" << a.word.str() << '\t' << a.word.size() << '\t'
         << a.distinct << '\t' << a.fs.size() << '\t' << (a.ok() ? 1 : 0) << '\n';
      return;
    }
    case OutputFormat::human: {
      os << "word: " << (a.word.empty() ? "(empty)" : a.word.str()) << " (length "
         << a.word.size() << ")\n";
      os << "distinct squares: " << a.distinct << "\n";
      os << "fs double squares: " << a.fs.size() << "\n";
      for (const FsDoubleSquare& fs : a.fs) detail::fsds_human(os, w, fs);
      if (!a.mates.empty()) {
        os << "mates (positions 1-based):\n";
        for (const MatePairReport& m : a.mates) {
          os << "  U@" << m.u_start + 1 << " -> V@" << m.v_start + 1 << ": "
             << mate_kind_name(m.classification.kind) << " (gap " << m.gap
             << ", tail " << m.tail << ")\n";
        }
      }
      if (!a.fs.empty()) {
        os << "family: regime " << family_regime_name(a.family.regime) << ", members";
        for (const auto& [fs, cls] : a.family.members) os << ' ' << fs.start + 1;
        if (a.family.first_non_family) {
          os << ", first outsider " << a.family.first_non_family->start + 1
             << " (d=" << *a.family.d << ", |T|=" << *a.family.tail << ")";
        }
        os << '\n';
      }
      if (a.ok()) {
        os << "audits: pass\n";
      } else {
        for (const Failure& f : a.failures) {
          os << "audit failure [" << f.check << "]: " << f.context << '\n';
        }
      }
      return;
    }
  }
}

inline void render_scan(std::ostream& os, const ScanReport& r, OutputFormat format) {
  using detail::json;
  switch (format) {
    case OutputFormat::jsonl: {
      for (const LengthStat& stat : r.per_length) {
        os << json{{"schema", 1},
                   {"type", "extremal"},
                   {"n", stat.n},
                   {"words", stat.words},
                   {"max_fs_double_squares", stat.max_delta},
                   {"fsds_witness", stat.delta_witness},
                   {"max_distinct_squares", stat.max_distinct},
                   {"distinct_witness", stat.distinct_witness}}
                  .dump()
           << '\n';
      }
      for (const Counterexample& ce : r.counterexamples) {
        os << json{{"schema", 1},
                   {"type", "counterexample"},
                   {"word", ce.word},
                   {"check", ce.check},
                   {"context", ce.context}}
                  .dump()
           << '\n';
      }
      json tallies = json::object();
      for (const auto& [k, v] : r.tallies) {
        tallies[k] = json{{"checked", v.checked}, {"failed", v.failed}};
      }
      os << json{{"schema", 1},
                 {"type", "summary"},
                 {"alphabet", r.config.alphabet_size},
                 {"min_len", r.config.min_len},
                 {"max_len", r.config.max_len},
                 {"canonical_only", r.config.canonical_only},
                 {"checks", r.config.checks.names()},
                 {"words_scanned", r.words_scanned},
                 {"tallies", tallies},
                 {"counterexamples", r.counterexamples.size()},
                 {"complete", r.complete},
                 {"pass", r.passed()}}
                .dump()
         << '\n';
      return;
    }
    case OutputFormat::tsv: {
      for (const LengthStat& stat : r.per_length) {
        os << "extremal\t" << stat.n << '\t' << stat.words << '\t' << stat.max_delta
           << '\t' << stat.delta_witness << '\t' << stat.max_distinct << '\t'
           << stat.distinct_witness << '\n';
      }
      for (const Counterexample& ce : r.counterexamples) {
        os << "counterexample\t" << ce.word << '\t' << ce.check << '\t' << ce.context
           << '\n';
      }
      os << "summary\t" << r.config.alphabet_size << '\t' << r.config.min_len << '\t'
         << r.config.max_len << '\t' << r.words_scanned << '\t'
         << r.counterexamples.size() << '\t' << (r.complete ? 1 : 0) << '\t'
         << (r.passed() ? 1 : 0) << '\n';
      return;
    }
    case OutputFormat::human: {
      os << "scan: alphabet " << r.config.alphabet_size << ", lengths "
         << r.config.min_len << ".." << r.config.max_len
         << (r.config.canonical_only ? ", canonical forms only" : "") << "\n";
      os << "words scanned: " << r.words_scanned << "\n";
      os << " n      words  max-fsds  witness" << std::string(14, ' ')
         << "max-distinct  witness\n";
      for (const LengthStat& stat : r.per_length) {
        os << ' ' << stat.n << '\t' << stat.words << '\t' << stat.max_delta << '\t'
           << stat.delta_witness << '\t' << stat.max_distinct << '\t'
           << stat.distinct_witness << '\n';
      }
      for (const auto& [k, v] : r.tallies) {
        os << "check " << k << ": " << v.checked << " words, " << v.failed
           << " failures\n";
      }
      for (const Counterexample& ce : r.counterexamples) {
        os << "counterexample: word=" << ce.word << " check=" << ce.check
           << " context=" << ce.context << '\n';
      }
      os << (r.passed() ? "result: pass\n" : "result: FAIL\n");
      return;
    }
  }
}

inline void render_fswords(std::ostream& os, const FsWordReport& r,
                           OutputFormat format) {
  using detail::json;
  std::string_view w = r.word.view();
  switch (format) {
    case OutputFormat::jsonl: {
      for (const FsDoubleSquare& fs : r.fs) {
        os << detail::fsds_record(w, fs).dump() << '\n';
      }
      os << json{{"schema", 1},
                 {"type", "summary"},
                 {"j", r.j},
                 {"length", r.length},
                 {"distinct_squares", r.distinct},
                 {"ratio", r.ratio},
                 {"fs_double_squares", r.fs.size()},
                 {"shape_matches", r.shape_matches},
                 {"audits_pass", r.failures.empty()},
                 {"word", r.word.str()}}
                .dump()
         << '\n';
      return;
    }
    case OutputFormat::tsv: {
      for (const FsDoubleSquare& fs : r.fs) detail::fsds_tsv(os, w, fs);
      os << "summary\t" << r.j << '\t' << r.length << '\t' << r.distinct << '\t'
         << r.ratio << '\t' << r.fs.size() << '\t' << r.shape_matches.size() << '\t'
         << (r.failures.empty() ? 1 : 0) << '\n';
      return;
    }
    case OutputFormat::human: {
      os << "Q_" << r.j << ": length " << r.length << "\n";
      if (r.length <= 120) os << "word: " << r.word.str() << "\n";
      os << "distinct squares: " << r.distinct << " (ratio " << r.ratio << ")\n";
      os << "fs double squares: " << r.fs.size() << "\n";
      for (const FsDoubleSquare& fs : r.fs) detail::fsds_human(os, w, fs);
      os << "family-shape factorizations at:";
      for (int s : r.shape_matches) os << ' ' << s + 1;
      os << "\naudits: " << (r.failures.empty() ? "pass" : "FAIL") << "\n";
      for (const Failure& f : r.failures) {
        os << "audit failure [" << f.check << "]: " << f.context << '\n';
      }
      return;
    }
  }
}

}  // namespace squarestat
