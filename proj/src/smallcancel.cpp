#include "hypstruct/smallcancel.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "hypstruct/kernels.hpp"

namespace hyp {

namespace {

constexpr char kA = 0, kB = 1;

bool is_6_aperiodic_syms(const std::string& s) {
  return is_l_aperiodic(from_syms(s), 6);
}

// Visits candidates (positive, starting and ending with b) in lexicographic
// order, a < b; the inner k-2 positions count up as binary digits.
template <typename F>
void for_each_candidate(int k, F&& visit) {
  if (k == 1) {
    visit(std::string(1, kB));
    return;
  }
  std::string s(static_cast<std::size_t>(k), kA);
  s.front() = kB;
  s.back() = kB;
  while (true) {
    visit(s);
    int i = k - 2;
    while (i >= 1 && s[static_cast<std::size_t>(i)] == kB) s[static_cast<std::size_t>(i--)] = kA;
    if (i < 1) break;
    s[static_cast<std::size_t>(i)] = kB;
  }
}

void check_enum_budget(int k, std::uint64_t budget) {
  require(k >= 1, ErrorKind::InvalidParameter, "X(k) requires k >= 1");
  if (k >= 2) {
    require(k - 2 < 63 && (1ull << (k - 2)) <= budget, ErrorKind::BudgetExceeded,
            "X(" + std::to_string(k) + ") enumeration would scan 2^" + std::to_string(k - 2) +
                " candidates, over the budget of " + std::to_string(budget));
  }
}

}  // namespace

XkCatalog enumerate_Xk(int k, std::uint64_t budget) {
  check_enum_budget(k, budget);
  XkCatalog cat;
  cat.k = k;
  for_each_candidate(k, [&](const std::string& s) {
    if (is_6_aperiodic_syms(s)) cat.words.push_back(s);
  });
  return cat;
}

std::vector<std::uint64_t> f_table(int n_max, std::uint64_t budget) {
  require(n_max >= 1, ErrorKind::InvalidParameter, "f_table requires n_max >= 1");
  check_enum_budget(n_max, budget);
  std::vector<std::uint64_t> f;
  f.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t count = 0;
    for_each_candidate(n, [&](const std::string& s) {
      if (is_6_aperiodic_syms(s)) ++count;
    });
    f.push_back(count);
  }
  return f;
}

K0Result find_k0(int k_max, std::uint64_t budget) {
  require(k_max >= 12, ErrorKind::Precondition, "find_k0 requires k_max >= 12");
  K0Result res;
  res.k_max = k_max;
  res.f = f_table(k_max - 6, budget);
  // ok(k) for k in (6, k_max]; k0 = start of the maximal true suffix.
  int k0 = 0;
  for (int k = k_max; k > 6; --k) {
    if (res.f[static_cast<std::size_t>(k - 7)] >= static_cast<std::uint64_t>(k))
      k0 = k;
    else
      break;
  }
  require(k0 != 0, ErrorKind::NotFound, "no k0 with f(k-6) >= k on (6, k_max]");
  res.k0 = k0;
  return res;
}

std::string build_vk_syms(int k, std::uint64_t budget) {
  require(k >= 7, ErrorKind::Precondition, "build_vk requires k >= 7");
  XkCatalog cat = enumerate_Xk(k - 6, budget);
  require(cat.words.size() >= static_cast<std::size_t>(k), ErrorKind::Precondition,
          "build_vk(" + std::to_string(k) + ") requires f(k-6) >= k, got f = " +
              std::to_string(cat.words.size()));
  std::string v;
  v.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    v.append(6, kA);
    v += cat.words[static_cast<std::size_t>(i)];
  }
  return v;
}

Word build_vk(int k, std::uint64_t budget) { return from_syms(build_vk_syms(k, budget)); }

namespace {

// Signed letters packed into chars so the string kernels apply: sym*2 + inv.
std::string encode(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const Letter& x : w)
    s.push_back(static_cast<char>(static_cast<unsigned>(x.sym) * 2 + (x.inv ? 1 : 0)));
  return s;
}

Word decode(std::string_view s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    w.push_back(Letter{static_cast<std::uint8_t>(u / 2), (u & 1u) != 0});
  }
  return w;
}

std::string encode_inverse(const std::string& s) {
  std::string r;
  r.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    r.push_back(static_cast<char>(static_cast<unsigned char>(*it) ^ 1u));
  return r;
}

// Recover one maximal common substring of xx and yy (bounded by cap) with end
// positions, for violation witnesses. Plain quadratic DP, run only on demand.
struct LcsWitness {
  std::size_t len = 0, end_x = 0, end_y = 0;
};

LcsWitness lcs_witness(const std::string& xx, const std::string& yy, std::size_t cap) {
  LcsWitness best;
  std::vector<std::size_t> prev(yy.size(), 0), cur(yy.size(), 0);
  for (std::size_t i = 0; i < xx.size(); ++i) {
    for (std::size_t j = 0; j < yy.size(); ++j) {
      std::size_t v = 0;
      if (xx[i] == yy[j]) v = (i && j ? prev[j - 1] : 0) + 1;
      if (v > cap) v = cap;  // longer matches still contain a cap-length piece
      cur[j] = v;
      if (v > best.len) best = {v, i + 1, j + 1};
    }
    std::swap(prev, cur);
  }
  return best;
}

}  // namespace

CStarReport verify_cstar(const std::vector<Word>& family, long lambda_num, long lambda_den,
                         bool inverse_aware) {
  require(lambda_num > 0 && lambda_den > 0, ErrorKind::InvalidParameter,
          "lambda must be a positive rational");
  require(!family.empty(), ErrorKind::InvalidParameter, "empty family");

  CStarReport rep;
  rep.lambda_num = lambda_num;
  rep.lambda_den = lambda_den;
  rep.inverse_aware = inverse_aware;

  std::vector<std::string> enc;
  enc.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Word& w = family[i];
    require(!w.empty(), ErrorKind::Precondition, "family words must be non-empty");
    require(is_cyclically_reduced(w), ErrorKind::Precondition,
            "family words must be cyclically reduced");
    require(inverse_aware || is_positive(w), ErrorKind::Precondition,
            "non-positive input requires inverse-aware mode");
    enc.push_back(encode(w));
  }
  for (std::size_t i = 0; i < enc.size(); ++i)
    for (std::size_t j = i + 1; j < enc.size(); ++j)
      require(enc[i] != enc[j], ErrorKind::Precondition, "family words must be distinct");

  const auto& kern = kernels::active();

  // Condition (a). A subword of a cyclic shift of v of length <= |v| is
  // exactly a substring of vv, so the longest common subword over all shift
  // pairs is min(lcs(vv, ww), min(|v|, |w|)).
  auto check_pair = [&](std::size_t i, std::size_t j, const std::string& vi,
                        const std::string& vj) {
    const std::size_t cap = std::min(vi.size(), vj.size());
    std::string xx = vi + vi, yy = vj + vj;
    std::size_t len = kern.lcs_max(reinterpret_cast<const unsigned char*>(xx.data()), xx.size(),
                                   reinterpret_cast<const unsigned char*>(yy.data()), yy.size());
    len = std::min(len, cap);
    rep.pair_pieces.push_back({i, j, len});
    rep.max_common_piece = std::max(rep.max_common_piece, len);
    // violation when len >= lambda * min(|v_i|, |v_j|)
    if (static_cast<long long>(len) * lambda_den >=
        static_cast<long long>(lambda_num) * static_cast<long long>(cap)) {
      LcsWitness w = lcs_witness(xx, yy, cap);
      CStarViolation v;
      v.condition = 'a';
      v.word_i = i;
      v.word_j = j;
      v.shift_i = (w.end_x - w.len) % vi.size();
      v.shift_j = (w.end_y - w.len) % vj.size();
      v.pos_i = 0;
      v.pos_j = 0;
      v.piece = decode(std::string_view(xx).substr(w.end_x - w.len, w.len));
      rep.violations.push_back(std::move(v));
    }
  };

  for (std::size_t i = 0; i < enc.size(); ++i) {
    for (std::size_t j = i + 1; j < enc.size(); ++j) {
      check_pair(i, j, enc[i], enc[j]);
      if (inverse_aware) check_pair(i, j, enc[i], encode_inverse(enc[j]));
    }
    if (inverse_aware) check_pair(i, i, enc[i], encode_inverse(enc[i]));
  }

  // Condition (b). If a subword of length >= lambda*|v| repeats inside one
  // shift, so does its prefix of length t = ceil(lambda*|v|), so scanning
  // windows of length exactly t suffices.
  for (std::size_t i = 0; i < enc.size(); ++i) {
    const std::string& v = enc[i];
    const std::size_t n = v.size();
    const long long tnum = lambda_num * static_cast<long long>(n);
    std::size_t t = static_cast<std::size_t>((tnum + lambda_den - 1) / lambda_den);
    if (t == 0) t = 1;
    if (t > n) continue;  // no subword reaches the threshold
    std::vector<std::string> shifts;
    shifts.reserve(inverse_aware ? 2 * n : n);
    std::string vv = v + v;
    for (std::size_t r = 0; r < n; ++r) shifts.push_back(vv.substr(r, n));
    if (inverse_aware) {
      std::string wi = encode_inverse(v), ww = wi + wi;
      for (std::size_t r = 0; r < n; ++r) shifts.push_back(ww.substr(r, n));
    }
    for (std::size_t r = 0; r < shifts.size(); ++r) {
      const std::string& s = shifts[r];
      std::unordered_map<std::string_view, std::size_t> seen;
      seen.reserve(n);
      for (std::size_t pos = 0; pos + t <= n; ++pos) {
        std::string_view win(s.data() + pos, t);
        auto [it, fresh] = seen.emplace(win, pos);
        if (!fresh) {
          CStarViolation viol;
          viol.condition = 'b';
          viol.word_i = i;
          viol.word_j = i;
          viol.shift_i = r;
          viol.shift_j = r;
          viol.pos_i = it->second;
          viol.pos_j = pos;
          viol.piece = decode(win);
          rep.violations.push_back(std::move(viol));
        }
      }
    }
  }

  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace hyp
