#include <catch2/catch_amalgamated.hpp>

#include "squarestat/fswords.hpp"

using namespace squarestat;

TEST_CASE("block words") {
  CHECK(generate_q(1).str() == "00101001");
  CHECK(generate_q(1).size() == 8);
  CHECK(generate_q(2).str() == "00010010001");
  CHECK_THROWS_AS(generate_q(0), std::domain_error);
  CHECK_THROWS_AS(generate_Q(0), std::domain_error);
  CHECK(generate_Q(1) == generate_q(1));
}

TEST_CASE("length closed form holds exactly") {
  for (int j = 1; j <= 50; ++j) {
    CHECK(static_cast<long long>(generate_Q(j).size()) == q_word_length(j));
  }
  CHECK(q_word_length(3) == 33);
}

TEST_CASE("first blocks host the documented double squares") {
  FsWordReport r2 = fsword_report(2);
  REQUIRE(r2.fs.size() == 1);
  CHECK(r2.fs[0].start == 5);
  CHECK(r2.fs[0].u_len == 4);
  CHECK(r2.fs[0].U_len == 7);
  CHECK(r2.fs[0].generator(r2.word).str() == "001");
  CHECK(r2.fs[0].prefix_part(r2.word).str() == "0");
  CHECK(r2.fs[0].e1 == 1);
  CHECK(r2.fs[0].e2 == 1);
  CHECK(r2.shape_matches == std::vector<int>{5});
  CHECK(r2.failures.empty());

  FsWordReport r3 = fsword_report(3);
  REQUIRE(!r3.fs.empty());
  CHECK(!r3.shape_matches.empty());

  FsWordReport r1 = fsword_report(1);
  CHECK(r1.fs.empty());  // single block: no double square yet
}

TEST_CASE("distinct counts of the first family members") {
  FsWordReport r5 = fsword_report(5);
  CHECK(r5.length == 70);
  CHECK(r5.distinct == 55);
  FsWordReport r10 = fsword_report(10);
  CHECK(r10.length == 215);
  CHECK(r10.distinct == 187);
  // the fast count agrees with the content-keyed oracle index
  CHECK(distinct_squares(generate_Q(5)).count() == 55);
  CHECK(distinct_squares(generate_Q(10)).count() == 187);
}

TEST_CASE("ratio grows with j on the small members") {
  double prev = 0.0;
  for (int j : {2, 3, 4, 5, 6}) {
    FsWordReport r = fsword_report(j);
    CHECK(r.ratio > prev);
    prev = r.ratio;
  }
}

TEST_CASE("every double square of the small family members passes audits") {
  for (int j = 2; j <= 8; ++j) {
    FsWordReport r = fsword_report(j);
    INFO("j=" << j);
    CHECK(r.failures.empty());
    CHECK(!r.fs.empty());
    CHECK(!r.shape_matches.empty());
    for (const FsDoubleSquare& fs : r.fs) {
      CHECK(core_conjugacy_audit(r.word, fs));
    }
  }
}

TEST_CASE("shape matcher rejects other factorizations") {
  std::string w = "aabaaabaabaaab";
  FsDoubleSquare fs = canonical_factorization(w, 0, 4, 7);
  CHECK_FALSE(matches_fs_word_shape(w, fs));  // letters, not 0/1 blocks
}
