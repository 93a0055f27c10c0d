#include <catch2/catch_amalgamated.hpp>

#include "squarestat/fs_core.hpp"

using namespace squarestat;

namespace {
const std::string kFig1 = "aabaaabaabaaab";
const std::string kFig2 = "aabbaaabbaabbaaabb";
}  // namespace

TEST_CASE("factorization of the length-14 double square") {
  FsDoubleSquare fs = canonical_factorization(kFig1, 0, 4, 7);
  CHECK(fs.generator(kFig1).str() == "aab");
  CHECK(fs.prefix_part(kFig1).str() == "a");
  CHECK(fs.e1 == 1);
  CHECK(fs.e2 == 1);
  CHECK(fs.p(kFig1).str() == "a");
  CHECK(fs.s(kFig1).str() == "");
  CHECK(fs.core_pos1() == 3);
  CHECK(fs.core_pos2() == 10);
  CHECK(fs.core(kFig1).str() == "aaa");
  CHECK(fs.trace == 0);
}

TEST_CASE("factorization with a longer generator") {
  FsDoubleSquare fs = canonical_factorization(kFig2, 0, 5, 9);
  CHECK(fs.generator(kFig2).str() == "aabb");
  CHECK(fs.prefix_part(kFig2).str() == "a");
  CHECK(fs.suffix_part(kFig2).str() == "abb");
  CHECK(fs.e1 == 1);
  CHECK(fs.e2 == 1);
  CHECK(fs.p(kFig2).str() == "a");
  CHECK(fs.s(kFig2).str() == "");
  CHECK(fs.core_pos1() == 4);
  CHECK(fs.core_pos2() == 13);
  CHECK(fs.core(kFig2).str() == "aaa");
}

TEST_CASE("factorization with first exponent two") {
  std::string w = "aabaabaaabaabaabaaaba";
  FsDoubleSquare fs = canonical_factorization(w, 0, 7, 10);
  CHECK(fs.generator(w).str() == "aab");
  CHECK(fs.prefix_part(w).str() == "a");
  CHECK(fs.e1 == 2);
  CHECK(fs.e2 == 1);
}

TEST_CASE("factorization of the minimal double square") {
  std::string w = "abaababaab";
  FsDoubleSquare fs = canonical_factorization(w, 0, 3, 5);
  CHECK(fs.generator(w).str() == "ab");
  CHECK(fs.prefix_part(w).str() == "a");
  CHECK(fs.e1 == 1);
  CHECK(fs.e2 == 1);
  CHECK(fs.p_len == 0);
  CHECK(fs.s_len == 0);
  CHECK(fs.core_len() == 2);
}

TEST_CASE("factorization rejects non-squares") {
  CHECK_THROWS_AS(canonical_factorization("abcabc", 0, 2, 3), std::domain_error);
  CHECK_THROWS_AS(canonical_factorization(kFig1, 0, 4, 9), std::domain_error);
  CHECK_THROWS_AS(canonical_factorization(kFig1, 0, 4, 4), std::domain_error);
  CHECK_THROWS_AS(canonical_factorization(kFig1, 0, 4, 8), std::domain_error);
}

TEST_CASE("factorization census finds exactly one tuple") {
  CHECK(enumerate_factorizations(kFig1, 0, 4, 7).size() == 1);
  CHECK(enumerate_factorizations(kFig2, 0, 5, 9).size() == 1);
  std::string fig3 = "aabaabaaabaabaabaaaba";
  CHECK(enumerate_factorizations(fig3, 0, 7, 10).size() == 1);
  CHECK(enumerate_factorizations(fig3, 1, 7, 10).size() == 1);
}

TEST_CASE("interrupt core equality") {
  FsDoubleSquare fs = canonical_factorization(kFig2, 0, 5, 9);
  InterruptCore core = interrupt_core(kFig2, fs);
  CHECK(core.p.str() == "a");
  CHECK(core.s.str() == "");
  CHECK(core.pos1 == 4);
  CHECK(core.pos2 == 13);
  CHECK(core.core.str() == "aaa");
}

TEST_CASE("core windows are not conjugates of the generator") {
  FsDoubleSquare fs = canonical_factorization(kFig2, 0, 5, 9);
  CHECK(core_conjugacy_audit(kFig2, fs));
  FsDoubleSquare fig1 = canonical_factorization(kFig1, 0, 4, 7);
  CHECK(core_conjugacy_audit(kFig1, fig1));
}

TEST_CASE("corrupted factorization trips the core audit") {
  FsDoubleSquare fs = canonical_factorization(kFig2, 0, 5, 9);
  FsDoubleSquare bad = fs;
  bad.u_len += bad.gen_len;  // as if e1 were one larger
  bool flagged = false;
  try {
    flagged = !core_conjugacy_audit(kFig2, bad);
  } catch (const std::domain_error&) {
    flagged = true;
  }
  CHECK(flagged);
}

TEST_CASE("trace values") {
  CHECK(canonical_factorization(kFig1, 0, 4, 7).trace == 0);  // word ends with U^2
  std::string w = "aabaabaaabaabaabaaabaabb";
  // the appended broken generator leaves the double square in place
  auto pos = fs_positions(w);
  REQUIRE(!pos.empty());
  CHECK(pos[0] == FsPosition{0, 7, 10});
  FsDoubleSquare fs = canonical_factorization(w, 0, 7, 10);
  CHECK(fs.trace == 1);
  CHECK(fs.trace <= fs.e1 - fs.e2);
}
