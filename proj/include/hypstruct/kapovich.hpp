#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "hypstruct/smallcancel.hpp"
#include "hypstruct/words.hpp"

namespace hyp {

// The generating sets Z_S of F(a,b,c). For n in S let w_n = v_n c. A
// W_S-word is a non-empty contiguous subword of (v_n c)^m for some n in S and
// m != 0; Z_S is the set of positive W_S-words, and |.|_{Z_S} equals the
// least k such that w factors graphically (no cancellation) into k W_S-words.

using SeedSet = std::vector<int>;  // sorted, distinct, each >= 7 with f(n-6) >= n

void validate_seed_set(const SeedSet& S);

// v_n c as a symbol string (0 = a, 1 = b, 2 = c).
std::string w_base_syms(int n, std::uint64_t budget = kDefaultEnumBudget);

bool is_W_word(const Word& z, const SeedSet& S);

// Cache of the positive W_S-words up to a length bound, for the DP and the
// BFS oracle.
struct WSet {
  SeedSet S;
  std::size_t max_len = 0;
  std::unordered_set<std::string> positive;  // symbol strings

  bool contains(const Word& z) const;  // positive or inverse-of-positive words
};

WSet make_wset(const SeedSet& S, std::size_t max_len);

struct ZDist {
  int dist = 0;
  std::vector<Word> factors;  // leftmost-longest optimal decomposition
};

ZDist dist_Z(const Word& w, const SeedSet& S, const WSet* cache = nullptr);

// Independent oracle: breadth-first search over the reduced words of length
// <= L in the Cayley graph of F(a,b,c) with generating set = positive
// W_S-words of length <= L and their inverses. Exact for |w| <= L because an
// optimal graphical decomposition of w only passes through prefixes of w.
class KapovichBfs {
 public:
  KapovichBfs(const SeedSet& S, int L, std::uint64_t state_budget = 1ull << 21);

  int dist(const Word& w) const;      // w reduced, |w| <= L
  int L() const { return L_; }
  std::size_t state_count() const { return dist_.size(); }

  // Rank <-> word over the state space (reduced words of length <= L).
  std::size_t rank(const Word& w) const;
  Word unrank(std::size_t idx) const;

 private:
  int L_;
  std::vector<std::size_t> offsets_;
  std::vector<std::int8_t> dist_;
};

int bfs_oracle_dist(const Word& w, const SeedSet& S, int L,
                    std::uint64_t state_budget = 1ull << 21);

struct SeparationProbe {
  int n = 0;                 // the seed the probe word comes from
  bool in_first = false;     // probe drawn from S \ T (else T \ S)
  Word word;                 // v_n
  int dist_S = 0, dist_T = 0;
  bool w_word_S = false, w_word_T = false;
  std::size_t piece_bound = 0;  // longest match against the other side's bases
};

struct SeparationCertificate {
  SeedSet S, T;
  int ratio_threshold = 2;
  std::vector<SeparationProbe> probes;
  std::string verdict;    // "incomparable-evidence" | "dominated-evidence"
  std::string direction;  // for dominated: which metric is never larger
};

SeparationCertificate separation_certificate(const SeedSet& S, const SeedSet& T,
                                             int max_probes_per_side = 2,
                                             int ratio_threshold = 2);

}  // namespace hyp
