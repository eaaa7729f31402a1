#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypstruct/words.hpp"

namespace hyp {

// Enumeration of X(k): positive 6-aperiodic words over {a,b} of length k that
// start and end with b, in lexicographic order (a < b). The candidate space
// has size 2^(k-2); enumeration refuses to scan past `budget` candidates.

inline constexpr std::uint64_t kDefaultEnumBudget = 1ull << 22;

struct XkCatalog {
  int k = 0;
  std::vector<std::string> words;  // symbol strings, 0 = a, 1 = b
};

XkCatalog enumerate_Xk(int k, std::uint64_t budget = kDefaultEnumBudget);

// f(n) = |X(n)| for n = 1..n_max; result[n-1] = f(n).
std::vector<std::uint64_t> f_table(int n_max, std::uint64_t budget = kDefaultEnumBudget);

struct K0Result {
  int k0 = 0;
  int k_max = 0;
  std::vector<std::uint64_t> f;  // f(1)..f(k_max-6)
};

// Smallest k0 > 6 with f(k-6) >= k for every k in [k0, k_max]; k_max >= 12.
K0Result find_k0(int k_max, std::uint64_t budget = kDefaultEnumBudget);

// v_k = (a^6 X_{k-6,1})(a^6 X_{k-6,2})...(a^6 X_{k-6,k}); requires f(k-6) >= k.
// |v_k| = k^2; the result is positive and 7-aperiodic.
std::string build_vk_syms(int k, std::uint64_t budget = kDefaultEnumBudget);
Word build_vk(int k, std::uint64_t budget = kDefaultEnumBudget);

// C*(lambda) verification. Condition (a): for distinct v, w in the family, a
// common contiguous subword u of cyclic shifts of v and of w has
// |u| < lambda * min(|v|, |w|) (strict). Condition (b): any subword u of a
// cyclic shift of v with |u| >= lambda * |v| occurs at most once (by start
// position) in each cyclic shift of v.
struct CStarViolation {
  char condition = 'a';       // 'a' or 'b'
  std::size_t word_i = 0;     // index into the family
  std::size_t word_j = 0;     // condition (a) only; == word_i for (b)
  std::size_t shift_i = 0;    // cyclic shift index (left rotation)
  std::size_t shift_j = 0;    // second shift / same shift for (b)
  std::size_t pos_i = 0;      // start of the piece inside shift_i
  std::size_t pos_j = 0;      // start of the second occurrence
  Word piece;
};

struct CStarPairPiece {
  std::size_t word_i = 0, word_j = 0;
  std::size_t piece_len = 0;  // longest common subword over all shift pairs
};

struct CStarReport {
  bool ok = true;
  long lambda_num = 0, lambda_den = 1;
  bool inverse_aware = false;
  std::size_t max_common_piece = 0;
  std::vector<CStarPairPiece> pair_pieces;
  std::vector<CStarViolation> violations;
};

CStarReport verify_cstar(const std::vector<Word>& family, long lambda_num, long lambda_den,
                         bool inverse_aware = false);

}  // namespace hyp
