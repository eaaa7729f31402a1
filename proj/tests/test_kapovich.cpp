#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "hypstruct/kapovich.hpp"
#include "hypstruct/rng.hpp"
#include "hypstruct/words.hpp"

using namespace hyp;

namespace {

Word random_reduced_abc(Rng& rng, int len) {
  Word w;
  while (static_cast<int>(w.size()) < len) {
    Letter x{static_cast<std::uint8_t>(rng.below(3)), rng.below(2) == 1};
    if (!w.empty() && w.back() == inverse(x)) continue;
    w.push_back(x);
  }
  return w;
}

}  // namespace

TEST_CASE("seed set validation") {
  CHECK_NOTHROW(validate_seed_set({12}));
  CHECK_NOTHROW(validate_seed_set({12, 13, 16}));
  CHECK_THROWS_AS(validate_seed_set({}), Error);
  CHECK_THROWS_AS(validate_seed_set({13, 12}), Error);   // unsorted
  CHECK_THROWS_AS(validate_seed_set({12, 12}), Error);   // duplicate
  CHECK_THROWS_AS(validate_seed_set({7}), Error);        // f(1) = 1 < 7
}

TEST_CASE("base words w_n = v_n c") {
  std::string w = w_base_syms(12);
  REQUIRE(w.size() == 145);
  CHECK(w.back() == 2);
  CHECK(w.substr(0, 144) == build_vk_syms(12));
}

TEST_CASE("W-word membership") {
  const Alphabet& abc = abc_alphabet();
  SeedSet S{12};
  Word v12 = build_vk(12);

  CHECK(is_W_word(v12, S));                          // subword of v_12 c
  CHECK(is_W_word(parse_word("a", abc), S));
  CHECK(is_W_word(parse_word("b", abc), S));
  CHECK(is_W_word(parse_word("c", abc), S));
  CHECK(is_W_word(parse_word("c a^6", abc), S));     // wraps across the c
  CHECK(is_W_word(inverse(v12), S));                 // inverses of W-words
  CHECK_FALSE(is_W_word(parse_word("a b'", abc), S));  // mixed signs
  CHECK_FALSE(is_W_word(parse_word("b b b b b b", abc), S));  // b^6 never occurs
  CHECK_FALSE(is_W_word(Word{}, S));

  // v_13 contains pieces of length > 20 absent from (v_12 c)^m.
  CHECK_FALSE(is_W_word(build_vk(13), S));
  CHECK(is_W_word(build_vk(13), SeedSet{12, 13}));
}

TEST_CASE("dist_Z frozen values") {
  const Alphabet& abc = abc_alphabet();
  SeedSet S{12};

  ZDist one = dist_Z(parse_word("a", abc), S);
  CHECK(one.dist == 1);

  // a^100: maximal W-factors are a^6-runs glued through X-blocks; the
  // run-length argument gives exactly 17.
  ZDist d100 = dist_Z(power(parse_word("a", abc), 100), S);
  CHECK(d100.dist == 17);
  REQUIRE(d100.factors.size() == 17);
  Word glued;
  for (const Word& f : d100.factors) {
    CHECK(is_W_word(f, S));
    // graphical concatenation: no cancellation at the seams
    if (!glued.empty()) CHECK(!(glued.back() == inverse(f.front())));
    glued.insert(glued.end(), f.begin(), f.end());
  }
  CHECK(glued == power(parse_word("a", abc), 100));

  CHECK(dist_Z(build_vk(12), S).dist == 1);
  CHECK(dist_Z(build_vk(13), S).dist > 1);
  CHECK(dist_Z(Word{}, S).dist == 0);
}

TEST_CASE("dist_Z is monotone under seed-set growth") {
  SeedSet S{12}, T{12, 13};
  WSet ws = make_wset(S, 24);
  WSet wt = make_wset(T, 24);
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_reduced_abc(rng, 1 + static_cast<int>(rng.below(12)));
    ZDist ds = dist_Z(w, S, &ws);
    ZDist dt = dist_Z(w, T, &wt);
    CHECK(dt.dist <= ds.dist);
    CHECK(ds.dist >= 1);
    // factors glue back to w
    Word glued;
    for (const Word& f : ds.factors) glued.insert(glued.end(), f.begin(), f.end());
    CHECK(glued == w);
  }
}

TEST_CASE("DP equals the BFS oracle on every reduced word up to length 5") {
  for (const SeedSet& S : {SeedSet{12}, SeedSet{12, 13}}) {
    KapovichBfs bfs(S, 5);
    // state count 1 + 6 * (5^0 + ... + 5^(L-1)) over the 3-letter alphabet
    CHECK(bfs.state_count() == 1 + 6 * (1 + 5 + 25 + 125 + 625));
    WSet cache = make_wset(S, 5);
    for (std::size_t idx = 0; idx < bfs.state_count(); ++idx) {
      Word w = bfs.unrank(idx);
      CHECK(bfs.rank(w) == idx);
      CHECK(bfs.dist(w) == dist_Z(w, S, &cache).dist);
    }
  }
}

TEST_CASE("BFS oracle input validation and budget") {
  SeedSet S{12};
  KapovichBfs bfs(S, 3);
  const Alphabet& abc = abc_alphabet();
  CHECK_THROWS_AS(bfs.dist(parse_word("a b a b", abc)), Error);   // longer than L
  CHECK_THROWS_AS(bfs.dist(parse_word("a a'", abc)), Error);      // not reduced
  CHECK(bfs_oracle_dist(parse_word("c a a", abc), S, 3) == 1);  // wraps c -> a^6
  CHECK(bfs_oracle_dist(parse_word("a b c", abc), S, 3) == 2);  // abc is not a piece of v_12 c
  // 6 * 5^8 reduced words of length 9 exceed the default state budget.
  CHECK_THROWS_AS(KapovichBfs(S, 9), Error);
  try {
    KapovichBfs(S, 9);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("separation certificates") {
  SeparationCertificate incomp = separation_certificate({12}, {13});
  CHECK(incomp.verdict == "incomparable-evidence");
  REQUIRE(incomp.probes.size() == 2);
  for (const SeparationProbe& p : incomp.probes) {
    if (p.in_first) {
      CHECK(p.n == 12);
      CHECK(p.dist_S == 1);
      CHECK(p.dist_T >= 2);
    } else {
      CHECK(p.n == 13);
      CHECK(p.dist_T == 1);
      CHECK(p.dist_S >= 2);
    }
  }

  SeparationCertificate dom = separation_certificate({12}, {12, 13});
  CHECK(dom.verdict == "dominated-evidence");
  CHECK(dom.direction == "|.|_{Z_T} <= |.|_{Z_S} on probes");
  REQUIRE(dom.probes.size() == 1);
  CHECK(dom.probes[0].n == 13);
  CHECK(dom.probes[0].dist_T == 1);
  CHECK(dom.probes[0].dist_S == 15);
}
