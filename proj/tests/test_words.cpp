#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "hypstruct/rng.hpp"
#include "hypstruct/words.hpp"

using namespace hyp;

namespace {

// Independent aperiodicity oracle: scan every subword start and period by
// brute force, no early-exit tricks shared with the library implementation.
bool naive_l_aperiodic(const Word& w, int l) {
  const std::size_t n = w.size();
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t period = 1; start + static_cast<std::size_t>(l) * period <= n; ++period) {
      bool match = true;
      for (std::size_t t = 0; t < static_cast<std::size_t>(l - 1) * period && match; ++t) {
        if (!(w[start + t] == w[start + t + period])) match = false;
      }
      if (match) return false;
    }
  }
  return true;
}

Word random_letters(Rng& rng, int len, int syms) {
  Word w;
  for (int i = 0; i < len; ++i) {
    w.push_back(Letter{static_cast<std::uint8_t>(rng.below(syms)), rng.below(2) == 1});
  }
  return w;
}

Word random_reduced(Rng& rng, int len, int syms) {
  Word w;
  while (static_cast<int>(w.size()) < len) {
    Letter x{static_cast<std::uint8_t>(rng.below(syms)), rng.below(2) == 1};
    if (!w.empty() && w.back() == inverse(x)) continue;
    w.push_back(x);
  }
  return w;
}

}  // namespace

TEST_CASE("parse and format round-trip") {
  const Alphabet& ab = ab_alphabet();
  const Alphabet& abc = abc_alphabet();

  CHECK(format_word(parse_word("a b' a", ab), ab) == "a b' a");
  CHECK(format_word(parse_word("a^6", ab), ab) == "a a a a a a");
  CHECK(format_word(parse_word("b'^3", ab), ab) == "b' b' b'");
  CHECK(format_word(parse_word("a^-2", ab), ab) == "a' a'");
  CHECK(format_word(parse_word("c", abc), abc) == "c");
  CHECK(parse_word("", ab).empty());
  CHECK(format_word(Word{}, ab) == "");

  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_letters(rng, static_cast<int>(rng.below(15)), 3);
    CHECK(parse_word(format_word(w, abc), abc) == w);
  }
}

TEST_CASE("parse rejects malformed input") {
  const Alphabet& ab = ab_alphabet();
  CHECK_THROWS_AS(parse_word("d", ab), Error);
  CHECK_THROWS_AS(parse_word("a^", ab), Error);
  CHECK_THROWS_AS(parse_word("a^x", ab), Error);
  CHECK_THROWS_AS(parse_word("^2", ab), Error);
  CHECK_THROWS_AS(parse_word("c", ab), Error);
  CHECK_THROWS_AS(parse_word("ab", ab), Error);
}

TEST_CASE("free reduction") {
  const Alphabet& ab = ab_alphabet();
  CHECK(reduced(parse_word("a a' b", ab)) == parse_word("b", ab));
  CHECK(reduced(parse_word("a b b' a'", ab)).empty());
  CHECK(is_reduced(parse_word("a b a'", ab)));
  CHECK_FALSE(is_reduced(parse_word("a a' ", ab)));

  Rng rng(102);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_letters(rng, static_cast<int>(rng.below(20)), 2);
    Word r = reduced(w);
    CHECK(is_reduced(r));
    CHECK(reduced(r) == r);
    // w * w^-1 reduces to the empty word.
    Word prod = concat_reduced(r, inverse(r));
    CHECK(prod.empty());
  }
}

TEST_CASE("power and concat") {
  const Alphabet& ab = ab_alphabet();
  Word ab_w = parse_word("a b", ab);
  CHECK(power(ab_w, 0).empty());
  CHECK(power(ab_w, 3) == parse_word("a b a b a b", ab));
  CHECK(power(ab_w, -2) == parse_word("b' a' b' a'", ab));

  Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = reduced(random_letters(rng, static_cast<int>(rng.below(8)), 2));
    long long e = rng.range(-4, 4);
    Word acc;
    Word step = e >= 0 ? w : inverse(w);
    for (long long i = 0; i < (e >= 0 ? e : -e); ++i) acc = concat_reduced(acc, step);
    CHECK(power(w, e) == acc);
  }
}

TEST_CASE("positivity") {
  const Alphabet& ab = ab_alphabet();
  CHECK(is_positive(parse_word("a b a", ab)));
  CHECK(is_positive(Word{}));
  CHECK_FALSE(is_positive(parse_word("a b'", ab)));
}

TEST_CASE("cyclic reduction and shifts") {
  const Alphabet& ab = ab_alphabet();
  CHECK(cyclically_reduced(parse_word("a b a'", ab)) == parse_word("b", ab));
  CHECK(is_cyclically_reduced(parse_word("a b", ab)));
  CHECK_FALSE(is_cyclically_reduced(parse_word("a b a'", ab)));

  Word w = parse_word("a b b", ab);
  auto shifts = cyclic_shifts(w);
  REQUIRE(shifts.size() == 3);
  CHECK(shifts[0] == parse_word("a b b", ab));
  CHECK(shifts[1] == parse_word("b b a", ab));
  CHECK(shifts[2] == parse_word("b a b", ab));

  Rng rng(104);
  for (int trial = 0; trial < 50; ++trial) {
    Word v = random_letters(rng, 1 + static_cast<int>(rng.below(10)), 2);
    Word c = cyclically_reduced(v);
    CHECK(is_cyclically_reduced(c));
    if (!c.empty()) {
      auto s = cyclic_shifts(c);
      CHECK(s.size() == c.size());
      for (const Word& x : s) CHECK(x.size() == c.size());
    }
  }
}

TEST_CASE("l-aperiodicity matches the brute-force oracle") {
  const Alphabet& ab = ab_alphabet();
  // Known witnesses.
  CHECK_FALSE(is_l_aperiodic(parse_word("a b a b", ab), 2));
  CHECK_FALSE(is_l_aperiodic(parse_word("a a b a a b", ab), 2));
  CHECK(is_l_aperiodic(parse_word("a b a", ab), 2));
  CHECK_FALSE(is_l_aperiodic(parse_word("b^6", ab), 6));
  CHECK(is_l_aperiodic(parse_word("b^5", ab), 6));

  auto earliest = find_l_power(parse_word("b a a b a a b", ab), 2);
  REQUIRE(earliest.has_value());
  CHECK(earliest->first == 0);   // "baabaa" starting at 0 with period 3
  CHECK(earliest->second == 3);

  Rng rng(105);
  for (int trial = 0; trial < 2000; ++trial) {
    Word w = random_letters(rng, static_cast<int>(rng.below(13)), 2);
    for (int l : {2, 3, 6, 7}) {
      bool fast = is_l_aperiodic(w, l);
      CHECK(fast == naive_l_aperiodic(w, l));
      auto wit = find_l_power(w, l);
      CHECK(wit.has_value() == !fast);
      if (wit) {
        // The witness really is a v^l at (start, period).
        REQUIRE(wit->first + static_cast<std::size_t>(l) * wit->second <= w.size());
        for (std::size_t t = 0; t < static_cast<std::size_t>(l - 1) * wit->second; ++t) {
          CHECK(w[wit->first + t] == w[wit->first + t + wit->second]);
        }
      }
    }
  }
}

TEST_CASE("symbol-string conversion") {
  const Alphabet& ab = ab_alphabet();
  Word w = parse_word("a b b a", ab);
  std::string s = to_syms(w);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == 0);
  CHECK(s[1] == 1);
  CHECK(from_syms(s) == w);
  CHECK_THROWS_AS(to_syms(parse_word("a'", ab)), Error);
}
