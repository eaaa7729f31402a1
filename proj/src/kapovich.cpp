#include "hypstruct/kapovich.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "hypstruct/kernels.hpp"

namespace hyp {

namespace {

constexpr std::uint8_t kCSym = 2;

std::string repeat_to_cover(const std::string& base, std::size_t len) {
  // Enough copies of base that every subword of the periodic word of length
  // <= len, at every phase, is a substring.
  std::size_t reps = len / base.size() + 2;
  std::string out;
  out.reserve(reps * base.size());
  for (std::size_t i = 0; i < reps; ++i) out += base;
  return out;
}

bool all_positive(const Word& z) { return is_positive(z); }

bool all_negative(const Word& z) {
  return std::all_of(z.begin(), z.end(), [](const Letter& x) { return x.inv; });
}

}  // namespace

void validate_seed_set(const SeedSet& S) {
  require(!S.empty(), ErrorKind::InvalidParameter, "seed set must be non-empty");
  for (std::size_t i = 0; i < S.size(); ++i) {
    require(S[i] >= 7, ErrorKind::InvalidParameter, "seed set entries must be >= 7");
    if (i) require(S[i - 1] < S[i], ErrorKind::InvalidParameter, "seed set must be sorted, distinct");
    // v_n exists only when f(n-6) >= n.
    require(enumerate_Xk(S[i] - 6).words.size() >= static_cast<std::size_t>(S[i]),
            ErrorKind::InvalidParameter,
            "seed " + std::to_string(S[i]) + " has f(n-6) < n; v_n does not exist");
  }
}

std::string w_base_syms(int n, std::uint64_t budget) {
  std::string base = build_vk_syms(n, budget);
  base.push_back(static_cast<char>(kCSym));
  return base;
}

bool is_W_word(const Word& z, const SeedSet& S) {
  validate_seed_set(S);
  if (z.empty()) return false;
  std::string probe;
  if (all_positive(z)) {
    probe = to_syms(z);
  } else if (all_negative(z)) {
    probe = to_syms(inverse(z));
  } else {
    return false;  // subwords of (v_n c)^m carry a single sign
  }
  for (int n : S) {
    std::string hay = repeat_to_cover(w_base_syms(n), probe.size());
    if (hay.find(probe) != std::string::npos) return true;
  }
  return false;
}

bool WSet::contains(const Word& z) const {
  if (z.empty() || z.size() > max_len) return false;
  if (all_positive(z)) return positive.count(to_syms(z)) > 0;
  if (all_negative(z)) return positive.count(to_syms(inverse(z))) > 0;
  return false;
}

WSet make_wset(const SeedSet& S, std::size_t max_len) {
  validate_seed_set(S);
  WSet ws;
  ws.S = S;
  ws.max_len = max_len;
  for (int n : S) {
    std::string base = w_base_syms(n);
    std::string hay = repeat_to_cover(base, max_len);
    for (std::size_t r = 0; r < base.size(); ++r)
      for (std::size_t len = 1; len <= max_len; ++len)
        ws.positive.insert(hay.substr(r, len));
  }
  return ws;
}

ZDist dist_Z(const Word& w, const SeedSet& S, const WSet* cache) {
  validate_seed_set(S);
  require(is_reduced(w), ErrorKind::Precondition, "dist_Z requires a reduced word");
  if (cache) {
    require(cache->S == S && cache->max_len >= w.size(), ErrorKind::InvalidParameter,
            "W-word cache does not cover this query");
  }
  const std::size_t L = w.size();
  ZDist out;
  if (L == 0) return out;

  auto member = [&](std::size_t j, std::size_t i) {
    Word sub(w.begin() + static_cast<std::ptrdiff_t>(j),
             w.begin() + static_cast<std::ptrdiff_t>(i));
    return cache ? cache->contains(sub) : is_W_word(sub, S);
  };

  // Suffix DP: e[j] = least number of W-word factors covering w[j..L).
  const int kInf = static_cast<int>(L) + 1;
  std::vector<int> e(L + 1, kInf);
  e[L] = 0;
  for (std::size_t j = L; j-- > 0;) {
    for (std::size_t i = j + 1; i <= L; ++i) {
      if (e[i] + 1 < e[j] && member(j, i)) e[j] = e[i] + 1;
    }
  }
  require(e[0] <= static_cast<int>(L), ErrorKind::Internal,
          "single letters are W-words, so the DP must complete");

  out.dist = e[0];
  // Leftmost-longest witness: from each position take the longest factor that
  // still lies on an optimal decomposition.
  std::size_t j = 0;
  while (j < L) {
    std::size_t pick = 0;
    for (std::size_t i = L; i > j; --i) {
      if (e[i] == e[j] - 1 && member(j, i)) {
        pick = i;
        break;
      }
    }
    require(pick > j, ErrorKind::Internal, "witness reconstruction failed");
    out.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(j),
                             w.begin() + static_cast<std::ptrdiff_t>(pick));
    j = pick;
  }
  return out;
}

KapovichBfs::KapovichBfs(const SeedSet& S, int L, std::uint64_t state_budget) : L_(L) {
  validate_seed_set(S);
  require(L >= 1, ErrorKind::InvalidParameter, "L must be >= 1");

  offsets_.assign(static_cast<std::size_t>(L) + 2, 0);
  std::size_t count = 1, total = 1;  // the empty word
  offsets_[0] = 0;
  for (int l = 1; l <= L; ++l) {
    count = (l == 1) ? 6 : count * 5;
    offsets_[static_cast<std::size_t>(l)] = total;
    total += count;
    require(total <= state_budget, ErrorKind::BudgetExceeded,
            "BFS ball of reduced words up to length " + std::to_string(L) +
                " exceeds the state budget");
  }
  offsets_[static_cast<std::size_t>(L) + 1] = total;

  // Generators: positive W_S-words of length <= L, plus inverses, as packed
  // letter codes (sym*2 + sign).
  WSet ws = make_wset(S, static_cast<std::size_t>(L));
  std::vector<std::string> pos(ws.positive.begin(), ws.positive.end());
  std::sort(pos.begin(), pos.end());
  struct Gen {
    std::uint8_t len;
    std::array<std::uint8_t, 16> c;
  };
  std::vector<Gen> gens;
  gens.reserve(2 * pos.size());
  for (const std::string& p : pos) {
    Gen g{};
    g.len = static_cast<std::uint8_t>(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      g.c[i] = static_cast<std::uint8_t>(2 * static_cast<unsigned char>(p[i]));
    gens.push_back(g);
    Gen inv{};
    inv.len = g.len;
    for (std::size_t i = 0; i < p.size(); ++i) inv.c[i] = g.c[p.size() - 1 - i] ^ 1u;
    gens.push_back(inv);
  }

  std::array<std::size_t, 9> pow5{};
  pow5[0] = 1;
  for (std::size_t i = 1; i < pow5.size(); ++i) pow5[i] = pow5[i - 1] * 5;

  auto rank_codes = [&](const std::uint8_t* c, std::size_t len) {
    if (len == 0) return static_cast<std::size_t>(0);
    std::size_t r = static_cast<std::size_t>(c[0]) * pow5[len - 1];
    for (std::size_t i = 1; i < len; ++i) {
      std::uint8_t forbidden = c[i - 1] ^ 1u;
      std::size_t digit = c[i] - (c[i] > forbidden ? 1 : 0);
      r += digit * pow5[len - 1 - i];
    }
    return offsets_[len] + r;
  };

  dist_.assign(total, -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(total);
  dist_[0] = 0;
  queue.push_back(0);

  std::array<std::uint8_t, 16> state{};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t idx = queue[head];
    const std::int8_t d = dist_[idx];
    // Decode idx into letter codes.
    std::size_t len = 0;
    while (offsets_[len + 1] <= idx) ++len;
    std::size_t r = idx - offsets_[len];
    if (len > 0) {
      state[0] = static_cast<std::uint8_t>(r / pow5[len - 1]);
      r %= pow5[len - 1];
      for (std::size_t i = 1; i < len; ++i) {
        std::size_t digit = r / pow5[len - 1 - i];
        r %= pow5[len - 1 - i];
        std::uint8_t forbidden = state[i - 1] ^ 1u;
        state[i] = static_cast<std::uint8_t>(digit + (digit >= forbidden ? 1 : 0));
      }
    }
    for (const Gen& g : gens) {
      // Cancel the seam, then append.
      std::size_t t = 0;
      while (t < len && t < g.len && state[len - 1 - t] == (g.c[t] ^ 1u)) ++t;
      std::size_t nlen = len + g.len - 2 * t;
      if (nlen > static_cast<std::size_t>(L_)) continue;
      std::array<std::uint8_t, 16> next{};
      std::size_t m = len - t;
      for (std::size_t i = 0; i < m; ++i) next[i] = state[i];
      for (std::size_t i = t; i < g.len; ++i) next[m++] = g.c[i];
      std::size_t nidx = rank_codes(next.data(), nlen);
      if (dist_[nidx] < 0) {
        dist_[nidx] = static_cast<std::int8_t>(d + 1);
        queue.push_back(static_cast<std::uint32_t>(nidx));
      }
    }
  }
}

std::size_t KapovichBfs::rank(const Word& w) const {
  require(is_reduced(w) && w.size() <= static_cast<std::size_t>(L_), ErrorKind::Precondition,
          "rank requires a reduced word of length <= L");
  std::size_t pow5 = 1;
  for (std::size_t i = 1; i < w.size(); ++i) pow5 *= 5;
  std::size_t r = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::uint8_t code = static_cast<std::uint8_t>(2 * w[i].sym + (w[i].inv ? 1 : 0));
    require(w[i].sym < 3, ErrorKind::Precondition, "alphabet is {a, b, c}");
    if (i == 0) {
      r += code * pow5;
    } else {
      std::uint8_t prev = static_cast<std::uint8_t>(2 * w[i - 1].sym + (w[i - 1].inv ? 1 : 0));
      std::uint8_t forbidden = prev ^ 1u;
      r += (code - (code > forbidden ? 1 : 0)) * pow5;
    }
    pow5 /= 5;
  }
  return offsets_[w.size()] + r;
}

Word KapovichBfs::unrank(std::size_t idx) const {
  require(idx < dist_.size(), ErrorKind::InvalidParameter, "state index out of range");
  std::size_t len = 0;
  while (offsets_[len + 1] <= idx) ++len;
  std::size_t r = idx - offsets_[len];
  Word w;
  w.reserve(len);
  std::size_t pow5 = 1;
  for (std::size_t i = 1; i < len; ++i) pow5 *= 5;
  std::uint8_t prev = 0;
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t digit = r / pow5;
    r %= pow5;
    pow5 = pow5 == 1 ? 1 : pow5 / 5;
    std::uint8_t code;
    if (i == 0) {
      code = static_cast<std::uint8_t>(digit);
    } else {
      std::uint8_t forbidden = prev ^ 1u;
      code = static_cast<std::uint8_t>(digit + (digit >= forbidden ? 1 : 0));
    }
    w.push_back(Letter{static_cast<std::uint8_t>(code / 2), (code & 1u) != 0});
    prev = code;
  }
  return w;
}

int KapovichBfs::dist(const Word& w) const {
  std::int8_t d = dist_[rank(w)];
  require(d >= 0, ErrorKind::Internal, "BFS ball is connected; unreached state");
  return d;
}

int bfs_oracle_dist(const Word& w, const SeedSet& S, int L, std::uint64_t state_budget) {
  require(w.size() <= static_cast<std::size_t>(L), ErrorKind::Precondition,
          "oracle is exact only for |w| <= L");
  KapovichBfs bfs(S, L, state_budget);
  return bfs.dist(w);
}

SeparationCertificate separation_certificate(const SeedSet& S, const SeedSet& T,
                                             int max_probes_per_side, int ratio_threshold) {
  validate_seed_set(S);
  validate_seed_set(T);
  require(max_probes_per_side >= 1, ErrorKind::InvalidParameter, "need at least one probe");
  require(ratio_threshold >= 2, ErrorKind::InvalidParameter, "ratio threshold must be >= 2");

  SeparationCertificate cert;
  cert.S = S;
  cert.T = T;
  cert.ratio_threshold = ratio_threshold;

  auto probe_side = [&](const SeedSet& own, const SeedSet& other, bool in_first) {
    int used = 0;
    bool separated = false;
    for (int n : own) {
      if (std::binary_search(other.begin(), other.end(), n)) continue;
      if (used++ >= max_probes_per_side) break;
      SeparationProbe p;
      p.n = n;
      p.in_first = in_first;
      p.word = build_vk(n);
      ZDist own_d = dist_Z(p.word, own);
      ZDist other_d = dist_Z(p.word, other);
      p.dist_S = in_first ? own_d.dist : other_d.dist;
      p.dist_T = in_first ? other_d.dist : own_d.dist;
      p.w_word_S = is_W_word(p.word, in_first ? own : other);
      p.w_word_T = is_W_word(p.word, in_first ? other : own);
      // Longest factor the other side's relators can supply: if shorter than
      // the probe, no single W-word covers it and the distance is >= 2.
      const auto& kern = kernels::active();
      std::string probe_s = to_syms(p.word);
      for (int t : other) {
        std::string hay = repeat_to_cover(w_base_syms(t), probe_s.size());
        std::size_t piece =
            kern.lcs_max(reinterpret_cast<const unsigned char*>(probe_s.data()), probe_s.size(),
                         reinterpret_cast<const unsigned char*>(hay.data()), hay.size());
        p.piece_bound = std::max(p.piece_bound, piece);
      }
      if (own_d.dist == 1 && other_d.dist >= ratio_threshold) separated = true;
      cert.probes.push_back(std::move(p));
    }
    return separated;
  };

  bool s_separates = probe_side(S, T, true);
  bool t_separates = probe_side(T, S, false);

  if (s_separates && t_separates) {
    cert.verdict = "incomparable-evidence";
    cert.direction = "";
  } else {
    cert.verdict = "dominated-evidence";
    if (s_separates)
      cert.direction = "|.|_{Z_S} <= |.|_{Z_T} on probes";
    else if (t_separates)
      cert.direction = "|.|_{Z_T} <= |.|_{Z_S} on probes";
    else
      cert.direction = "no probe separated either side";
  }
  return cert;
}

}  // namespace hyp
