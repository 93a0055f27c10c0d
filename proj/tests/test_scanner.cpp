#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "squarestat/report.hpp"
#include "squarestat/scanner.hpp"

using namespace squarestat;

namespace {

std::string rendered(const ScanReport& r) {
  std::ostringstream os;
  render_scan(os, r, OutputFormat::jsonl);
  return os.str();
}

}  // namespace

TEST_CASE("binary scan up to length 12 is clean") {
  ScanConfig config;
  config.alphabet_size = 2;
  config.min_len = 1;
  config.max_len = 12;
  ScanReport r = scan(config);
  CHECK(r.passed());
  CHECK(r.counterexamples.empty());
  CHECK(r.words_scanned == (1u << 12) - 1);  // canonical binary: 2^(n-1) per n
  REQUIRE(r.per_length.size() == 12);
  CHECK(r.per_length.back().n == 12);
  for (const auto& [check, tally] : r.tallies) {
    INFO(check);
    CHECK(tally.failed == 0);
  }
}

TEST_CASE("first double square appears at length 10") {
  ScanConfig config;
  config.max_len = 10;
  ScanReport r = scan(config);
  for (const LengthStat& stat : r.per_length) {
    if (stat.n < 10) {
      CHECK(stat.max_delta == 0);
    } else {
      CHECK(stat.max_delta == 1);
      CHECK(stat.delta_witness == "abaababaab");
    }
  }
}

TEST_CASE("extremal row at length 14") {
  ScanConfig config;
  config.min_len = 14;
  config.max_len = 14;
  config.checks = CheckSet::parse("delta");
  ScanReport r = scan(config);
  REQUIRE(r.per_length.size() == 1);
  CHECK(r.per_length[0].max_delta == 1);
  CHECK(r.per_length[0].delta_witness == "aaaaabaababaab");
}

TEST_CASE("scan reports are identical across worker counts") {
  ScanConfig config;
  config.alphabet_size = 3;
  config.min_len = 1;
  config.max_len = 9;
  config.jobs = 1;
  std::string one = rendered(scan(config));
  config.jobs = 4;
  std::string four = rendered(scan(config));
  config.jobs = 8;
  std::string eight = rendered(scan(config));
  CHECK(one == four);
  CHECK(four == eight);
}

TEST_CASE("canonical reduction only drops permuted duplicates") {
  ScanConfig config;
  config.alphabet_size = 2;
  config.min_len = 1;
  config.max_len = 10;
  ScanReport canonical = scan(config);
  config.canonical_only = false;
  ScanReport full = scan(config);
  CHECK(full.words_scanned == 2 * canonical.words_scanned);
  CHECK(full.passed());
  CHECK(canonical.passed());
  REQUIRE(full.per_length.size() == canonical.per_length.size());
  for (std::size_t i = 0; i < full.per_length.size(); ++i) {
    CHECK(full.per_length[i].max_delta == canonical.per_length[i].max_delta);
    CHECK(full.per_length[i].max_distinct == canonical.per_length[i].max_distinct);
  }
}

TEST_CASE("invalid configurations are rejected") {
  ScanConfig config;
  config.max_len = 0;
  CHECK_THROWS_AS(scan(config), std::domain_error);
  config.max_len = 5;
  config.alphabet_size = 7;
  CHECK_THROWS_AS(scan(config), std::domain_error);
  config.alphabet_size = 2;
  config.jobs = 0;
  CHECK_THROWS_AS(scan(config), std::domain_error);
}

TEST_CASE("check subsets narrow the work") {
  ScanConfig config;
  config.max_len = 8;
  config.checks = CheckSet::parse("delta,distinct");
  ScanReport r = scan(config);
  CHECK(r.passed());
  CHECK(r.tallies.count("delta") == 1);
  CHECK(r.tallies.count("bounds") == 0);
}
