#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hypstruct/smallcancel.hpp"
#include "hypstruct/words.hpp"

using namespace hyp;

namespace {

// Independent oracle for X(k): walk all 2^k binary strings (0 = a, 1 = b) in
// lexicographic order and filter directly on the definition.
bool naive_6_aperiodic(const std::string& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 1; i + 6 * p <= n; ++p) {
      bool hit = true;
      for (std::size_t j = i; j < i + 5 * p && hit; ++j) {
        if (s[j] != s[j + p]) hit = false;
      }
      if (hit) return false;
    }
  }
  return true;
}

std::vector<std::string> naive_Xk(int k) {
  std::vector<std::string> out;
  for (std::uint64_t bits = 0; bits < (1ull << k); ++bits) {
    std::string s(k, 0);
    for (int i = 0; i < k; ++i) s[i] = static_cast<char>((bits >> (k - 1 - i)) & 1);
    if (s.front() != 1 || s.back() != 1) continue;
    if (naive_6_aperiodic(s)) out.push_back(s);
  }
  return out;
}

// Uncapped longest common contiguous subword of a cyclic shift of v and a
// cyclic shift of w, by quadratic DP over the doubled symbol strings, capped
// at min(|v|, |w|) since longer strings cannot be subwords of single shifts.
std::size_t oracle_common_piece(const std::string& v, const std::string& w) {
  std::string dv = v + v, dw = w + w;
  std::vector<std::size_t> prev(dw.size() + 1, 0), cur(dw.size() + 1, 0);
  std::size_t best = 0;
  for (std::size_t i = 1; i <= dv.size(); ++i) {
    for (std::size_t j = 1; j <= dw.size(); ++j) {
      cur[j] = dv[i - 1] == dw[j - 1] ? prev[j - 1] + 1 : 0;
      best = std::max(best, cur[j]);
    }
    std::swap(prev, cur);
  }
  return std::min(best, std::min(v.size(), w.size()));
}

// Condition (b) oracle: some subword of length >= lambda * |v| of a cyclic
// shift occurs at two start positions of one shift.
bool oracle_has_repeated_long_piece(const std::string& v, long num, long den) {
  const std::size_t n = v.size();
  // ceil(num * n / den)
  std::size_t min_len = (static_cast<std::size_t>(num) * n + den - 1) / den;
  std::string d = v + v;
  for (std::size_t shift = 0; shift < n; ++shift) {
    std::string rot = d.substr(shift, n);
    for (std::size_t len = min_len; len <= n; ++len) {
      for (std::size_t p1 = 0; p1 + len <= n; ++p1) {
        for (std::size_t p2 = p1 + 1; p2 + len <= n; ++p2) {
          if (rot.compare(p1, len, rot, p2, len) == 0) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("X(k) enumeration matches the brute-force oracle") {
  for (int k = 1; k <= 10; ++k) {
    XkCatalog cat = enumerate_Xk(k);
    std::vector<std::string> oracle = naive_Xk(k);
    CHECK(cat.k == k);
    REQUIRE(cat.words.size() == oracle.size());
    CHECK(cat.words == oracle);
    CHECK(std::is_sorted(cat.words.begin(), cat.words.end()));
    for (const std::string& s : cat.words) {
      Word w = from_syms(s);
      CHECK(is_positive(w));
      CHECK(is_l_aperiodic(w, 6));
      CHECK(s.front() == 1);
      CHECK(s.back() == 1);
    }
  }
}

TEST_CASE("f-table frozen values") {
  // Oracle-confirmed counts for n = 1..10. The value at n = 8 is 60: the
  // brute-force enumeration above is the ground truth for this fixture.
  std::vector<std::uint64_t> expect{1, 1, 2, 4, 8, 15, 31, 60, 118, 232};
  CHECK(f_table(10) == expect);
  for (int n = 1; n <= 10; ++n) {
    CHECK(naive_Xk(n).size() == expect[static_cast<std::size_t>(n) - 1]);
  }
}

TEST_CASE("k0 search") {
  K0Result r12 = find_k0(12);
  CHECK(r12.k0 == 12);
  CHECK(r12.k_max == 12);
  K0Result r20 = find_k0(20);
  CHECK(r20.k0 == 12);
  REQUIRE(r20.f.size() == 14);
  // f(k-6) >= k for all k in [12, 20].
  for (int k = r20.k0; k <= 20; ++k) {
    CHECK(r20.f[static_cast<std::size_t>(k) - 7] >= static_cast<std::uint64_t>(k));
  }
  // 11 is too small: f(5) = 8 < 11.
  CHECK(r20.f[4] == 8);
  CHECK_THROWS_AS(find_k0(11), Error);
}

TEST_CASE("v_k construction") {
  for (int k = 12; k <= 16; ++k) {
    Word v = build_vk(k);
    CHECK(v.size() == static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    CHECK(is_positive(v));
    CHECK(is_l_aperiodic(v, 7));
    // Rebuild from the catalog: k blocks a^6 X_{k-6,i}.
    XkCatalog cat = enumerate_Xk(k - 6);
    REQUIRE(cat.words.size() >= static_cast<std::size_t>(k));
    std::string expect;
    for (int i = 0; i < k; ++i) {
      expect += std::string(6, 0);
      expect += cat.words[static_cast<std::size_t>(i)];
    }
    CHECK(build_vk_syms(k) == expect);
    CHECK(to_syms(v) == expect);
  }
  // k = 7 needs f(1) = 1 >= 7, which fails.
  CHECK_THROWS_AS(build_vk(7), Error);
}

TEST_CASE("v_k aperiodicity against the naive scan") {
  Word v = build_vk(12);
  std::string s = to_syms(v);
  // Direct cubic scan for a 7th power.
  bool found = false;
  for (std::size_t i = 0; i < s.size() && !found; ++i) {
    for (std::size_t p = 1; i + 7 * p <= s.size() && !found; ++p) {
      bool hit = true;
      for (std::size_t j = i; j < i + 6 * p && hit; ++j) {
        if (s[j] != s[j + p]) hit = false;
      }
      found = hit;
    }
  }
  CHECK_FALSE(found);
}

TEST_CASE("C*(3/12) holds for the v_12..v_16 family") {
  std::vector<Word> family;
  for (int k = 12; k <= 16; ++k) family.push_back(build_vk(k));
  CStarReport rep = verify_cstar(family, 3, 12);
  CHECK(rep.ok);
  CHECK(rep.violations.empty());
  CHECK(rep.lambda_num == 3);
  CHECK(rep.lambda_den == 12);
  CHECK(rep.max_common_piece == 20);
  REQUIRE(rep.pair_pieces.size() == 10);

  // Condition (a) oracle: recompute every pairwise longest piece by DP.
  std::vector<std::string> syms;
  for (const Word& w : family) syms.push_back(to_syms(w));
  std::size_t oracle_max = 0;
  for (const CStarPairPiece& pp : rep.pair_pieces) {
    std::size_t lcs = oracle_common_piece(syms[pp.word_i], syms[pp.word_j]);
    CHECK(pp.piece_len == lcs);
    oracle_max = std::max(oracle_max, lcs);
    // Strict C* bound: piece < (3/12) * min length.
    std::size_t min_len = std::min(syms[pp.word_i].size(), syms[pp.word_j].size());
    CHECK(4 * pp.piece_len < min_len * 3);
  }
  CHECK(oracle_max == rep.max_common_piece);
}

TEST_CASE("C* condition (b) oracle on small words") {
  // v_12 alone: no subword of length >= 36 repeats inside one cyclic shift.
  Word v = build_vk(12);
  CHECK_FALSE(oracle_has_repeated_long_piece(to_syms(v), 3, 12));
  CStarReport rep = verify_cstar({v}, 3, 12);
  CHECK(rep.ok);

  // A word with an obvious repeated long piece fails condition (b):
  // abab repeats "ab" (lambda = 1/2 makes the threshold length 2).
  Word bad = from_syms(std::string{0, 1, 0, 1});
  CHECK(oracle_has_repeated_long_piece(to_syms(bad), 1, 2));
  CStarReport rep_bad = verify_cstar({bad}, 1, 2);
  CHECK_FALSE(rep_bad.ok);
  REQUIRE_FALSE(rep_bad.violations.empty());
  bool has_b = false;
  for (const CStarViolation& viol : rep_bad.violations) {
    if (viol.condition == 'b') has_b = true;
  }
  CHECK(has_b);
}

TEST_CASE("C* detects cross-word pieces") {
  // Two words sharing the long block "aabab" violate condition (a) at
  // lambda = 1/2 (threshold: piece < 3 for length-6 words).
  Word u = from_syms(std::string{0, 0, 1, 0, 1, 1});
  Word w = from_syms(std::string{1, 0, 0, 1, 0, 1});
  CHECK(oracle_common_piece(to_syms(u), to_syms(w)) >= 5);
  CStarReport rep = verify_cstar({u, w}, 1, 2);
  CHECK_FALSE(rep.ok);
  bool has_a = false;
  for (const CStarViolation& viol : rep.violations) {
    if (viol.condition == 'a') {
      has_a = true;
      CHECK(viol.piece.size() >= 3);
    }
  }
  CHECK(has_a);
}

TEST_CASE("enumeration budget") {
  // 2^(k-2) candidates exceed the default budget at k = 26.
  CHECK_THROWS_AS(enumerate_Xk(26), Error);
  try {
    enumerate_Xk(26);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
    CHECK(e.exit_code() == 3);
  }
  CHECK_THROWS_AS(enumerate_Xk(12, 16), Error);
  CHECK_THROWS_AS(f_table(26), Error);
  CHECK_THROWS_AS(build_vk(32), Error);
}
