// Command-line front end: analyze words, run exhaustive scans, generate
// Fraenkel-Simpson words, and run the tool-lemma suites.
//
// Exit codes: 0 success, 1 audit failures / counterexamples found,
// 2 usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "squarestat/report.hpp"
#include "squarestat/squarestat.hpp"
#include "squarestat/toolsuites.hpp"

namespace {

using namespace squarestat;

int default_jobs() {
  if (const char* env = std::getenv("SQUARESTAT_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

int run_analyze(const std::string& input, OutputFormat format, const CheckSet& checks,
                ClassifyOptions opts) {
  std::vector<std::string> words;
  if (!input.empty() && input[0] == '@') {
    std::ifstream in(input.substr(1));
    if (!in) {
      std::cerr << "squarestat: cannot read " << input.substr(1) << '\n';
      return 2;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                               line.back() == '\r')) {
        line.pop_back();
      }
      if (!line.empty()) words.push_back(line);
    }
  } else {
    words.push_back(input);
  }
  for (const std::string& text : words) {
    WordAnalysis a = analyze(Word::parse(text), checks, opts);
    render_analysis(std::cout, a, format);
  }
  return 0;
}

int run_scan(const ScanConfig& config, OutputFormat format) {
  ScanReport report = scan(config);
  render_scan(std::cout, report, format);
  return report.passed() ? 0 : 1;
}

int run_fswords(int j, OutputFormat format) {
  FsWordReport report = fsword_report(j);
  render_fswords(std::cout, report, format);
  return 0;
}

int run_audit(const std::string& suite, int fw_max, int sync_max, int lcb_max,
              int tsq_max) {
  std::vector<SuiteResult> results;
  if (suite == "all" || suite == "fine-wilf") results.push_back(fine_wilf_suite(fw_max));
  if (suite == "all" || suite == "synchronization") {
    results.push_back(synchronization_suite(sync_max));
  }
  if (suite == "all" || suite == "longest-common-border") {
    results.push_back(longest_common_border_suite(lcb_max));
  }
  if (suite == "all" || suite == "three-squares") {
    results.push_back(three_squares_suite(tsq_max));
  }
  if (results.empty()) {
    std::cerr << "squarestat: unknown suite " << suite << '\n';
    return 2;
  }
  bool ok = true;
  for (const SuiteResult& r : results) {
    std::cout << r.name << ": " << r.words << " words, " << r.violations
              << " violations";
    if (!r.first_context.empty()) std::cout << " (first: " << r.first_context << ')';
    std::cout << '\n';
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distinct-square and FS-double-square analysis toolkit"};
  app.require_subcommand(1);

  std::string format_name = "human";
  std::string checks_name = "all";
  bool relaxed = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "human, jsonl or tsv")
        ->default_str("human");
    cmd->add_flag("--relaxed-windows", relaxed,
                  "widen the epsilon/eta end windows by one position");
  };

  std::string input;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze one word or @file");
  analyze_cmd->add_option("word", input, "word, or @file with one word per line");
  analyze_cmd->add_option("--checks", checks_name, "comma list of check groups");
  add_common(analyze_cmd);

  ScanConfig config;
  config.jobs = default_jobs();
  CLI::App* scan_cmd = app.add_subcommand("scan", "exhaustive scan of small words");
  scan_cmd->add_option("--alphabet", config.alphabet_size, "alphabet size (2..4)");
  scan_cmd->add_option("--min", config.min_len, "smallest length");
  scan_cmd->add_option("--max", config.max_len, "largest length")->required();
  scan_cmd->add_option("--jobs", config.jobs, "worker count");
  scan_cmd->add_option("--budget", config.counterexample_budget,
                       "stop after this many counterexamples");
  scan_cmd->add_flag("!--no-canonical", config.canonical_only,
                     "scan every word, not only canonical forms");
  scan_cmd->add_option("--checks", checks_name, "comma list of check groups");
  add_common(scan_cmd);

  int j = 0;
  CLI::App* fswords_cmd =
      app.add_subcommand("fswords", "generate and analyze the word Q_j");
  fswords_cmd->add_option("--j", j, "block count")->required();
  add_common(fswords_cmd);

  std::string suite = "all";
  int fw_max = 16, sync_max = 14, lcb_max = 14, tsq_max = 18;
  CLI::App* audit_cmd = app.add_subcommand("audit", "run the tool-lemma suites");
  audit_cmd->add_option("--suite", suite,
                        "fine-wilf, synchronization, longest-common-border, "
                        "three-squares or all");
  audit_cmd->add_option("--fw-max", fw_max, "fine-wilf max length");
  audit_cmd->add_option("--sync-max", sync_max, "synchronization max length");
  audit_cmd->add_option("--lcb-max", lcb_max, "longest-common-border max length");
  audit_cmd->add_option("--tsq-max", tsq_max, "three-squares max length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    OutputFormat format = parse_format(format_name);
    CheckSet checks = CheckSet::parse(checks_name);
    ClassifyOptions opts{.inclusive_windows = relaxed};
    if (analyze_cmd->parsed()) return run_analyze(input, format, checks, opts);
    if (scan_cmd->parsed()) {
      config.checks = checks;
      config.classify = opts;
      return run_scan(config, format);
    }
    if (fswords_cmd->parsed()) {
      if (j < 1) {
        std::cerr << "squarestat: --j must be at least 1\n";
        return 2;
      }
      return run_fswords(j, format);
    }
    if (audit_cmd->parsed()) return run_audit(suite, fw_max, sync_max, lcb_max, tsq_max);
  } catch (const std::domain_error& e) {
    std::cerr << "squarestat: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "squarestat: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
