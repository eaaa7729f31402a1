#include "hypstruct/groups.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace hyp {

namespace {

void bs_check_budget(const BsElement& g) {
  require(mpz_sizeinbase(g.num.get_mpz_t(), 2) <= static_cast<std::size_t>(kBsBitBudget) &&
              g.e <= kBsBitBudget && std::labs(g.k) <= kBsBitBudget,
          ErrorKind::BudgetExceeded, "BS(1,2) element exceeds the big-integer budget");
}

BsElement bs_canonical(mpz_class num, long e, long k) {
  if (num == 0) {
    e = 0;
  } else {
    while (e > 0 && mpz_even_p(num.get_mpz_t())) {
      num >>= 1;
      --e;
    }
  }
  BsElement g{std::move(num), e, k};
  bs_check_budget(g);
  return g;
}

long wreath_norm_val(long v, long mod) {
  if (mod == 0) return v;
  v %= mod;
  if (v < 0) v += mod;
  return v;
}

// Sort by position, merge duplicates, normalize values, prune zeros.
void wreath_normalize(WreathElement& g) {
  std::sort(g.f.begin(), g.f.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<long, long>> out;
  out.reserve(g.f.size());
  for (const auto& [pos, val] : g.f) {
    if (!out.empty() && out.back().first == pos)
      out.back().second += val;
    else
      out.emplace_back(pos, val);
  }
  g.f.clear();
  for (auto& [pos, val] : out) {
    long v = wreath_norm_val(val, g.mod);
    if (v != 0) g.f.emplace_back(pos, v);
  }
}

std::string trim_copy(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

long parse_long(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(trim_copy(s), &used);
    require(used == trim_copy(s).size(), ErrorKind::MalformedInput,
            std::string("trailing junk in ") + what);
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::MalformedInput, std::string("cannot parse ") + what + ": '" + s + "'");
  }
}

}  // namespace

BsElement bs_identity() { return BsElement{}; }

BsElement bs_a(long m) { return bs_canonical(mpz_class(m), 0, 0); }

BsElement bs_b(long k) { return bs_canonical(0, 0, k); }

BsElement bs_mul(const BsElement& g, const BsElement& h) {
  // r'' = r_g + 2^{k_g} r_h; the second term is num_h / 2^{e_h - k_g}.
  long t = h.e - g.k;
  mpz_class num;
  long e;
  if (t >= 0) {
    e = std::max(g.e, t);
    num = (g.num << static_cast<unsigned>(e - g.e)) + (h.num << static_cast<unsigned>(e - t));
  } else {
    e = g.e;
    num = g.num + (h.num << static_cast<unsigned>(g.e - t));
  }
  return bs_canonical(std::move(num), e, g.k + h.k);
}

BsElement bs_inv(const BsElement& g) {
  // (r, k)^-1 = (-r 2^{-k}, -k).
  long e = g.e + g.k;
  if (e >= 0) return bs_canonical(-g.num, e, -g.k);
  return bs_canonical(-(g.num << static_cast<unsigned>(-e)), 0, -g.k);
}

BsElement bs_pow(const BsElement& g, long n) {
  BsElement base = n < 0 ? bs_inv(g) : g;
  unsigned long m = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  BsElement acc = bs_identity();
  while (m) {
    if (m & 1) acc = bs_mul(acc, base);
    m >>= 1;
    if (m) base = bs_mul(base, base);
  }
  return acc;
}

BsBritton bs_britton(const BsElement& g) {
  BsBritton br;
  br.p = std::max({g.e, -g.k, 0L});
  require(mpz_sizeinbase(g.num.get_mpz_t(), 2) + static_cast<std::size_t>(br.p - g.e) <=
              static_cast<std::size_t>(kBsBitBudget),
          ErrorKind::BudgetExceeded, "Britton exponent exceeds the big-integer budget");
  br.m = g.num << static_cast<unsigned>(br.p - g.e);
  br.q = br.p + g.k;
  return br;
}

BsElement bs_from_word(const Word& w) {
  BsElement g = bs_identity();
  for (const Letter& x : w) {
    require(x.sym < 2, ErrorKind::MalformedInput, "BS(1,2) words use the alphabet {a, b}");
    BsElement gen = x.sym == 0 ? bs_a(x.inv ? -1 : 1) : bs_b(x.inv ? -1 : 1);
    g = bs_mul(g, gen);
  }
  return g;
}

BsElement bs_parse(const std::string& text) {
  return bs_from_word(parse_word(text, ab_alphabet()));
}

std::string bs_format(const BsElement& g) {
  BsBritton br = bs_britton(g);
  std::string out;
  if (br.p) out += "b^-" + std::to_string(br.p);
  if (br.m != 0) {
    if (!out.empty()) out += ' ';
    out += "a^" + br.m.get_str();
  }
  if (br.q) {
    if (!out.empty()) out += ' ';
    out += "b^" + std::to_string(br.q);
  }
  return out.empty() ? "a^0" : out;
}

std::string bs_key(const BsElement& g) {
  return g.num.get_str() + "|" + std::to_string(g.e) + "|" + std::to_string(g.k);
}

long epsilon(const BsElement& g) { return g.k; }

std::array<double, 4> bs_matrix(const BsElement& g) {
  double r = mpz_get_d(g.num.get_mpz_t()) * std::ldexp(1.0, static_cast<int>(-g.e));
  double s = std::exp2(0.5 * static_cast<double>(g.k));
  return {s, r / s, 0.0, 1.0 / s};
}

WreathElement w_identity(long mod) {
  require(mod == 0 || mod >= 2, ErrorKind::InvalidParameter, "lamp modulus must be 0 or >= 2");
  return WreathElement{mod, {}, 0};
}

WreathElement w_lamp(long pos, long val, long mod) {
  WreathElement g = w_identity(mod);
  g.f.emplace_back(pos, val);
  wreath_normalize(g);
  return g;
}

WreathElement w_shift(long k, long mod) {
  WreathElement g = w_identity(mod);
  g.k = k;
  return g;
}

WreathElement w_mul(const WreathElement& g, const WreathElement& h) {
  require(g.mod == h.mod, ErrorKind::InvalidParameter, "wreath elements from different groups");
  WreathElement out = g;
  out.f.reserve(g.f.size() + h.f.size());
  for (const auto& [pos, val] : h.f) out.f.emplace_back(pos + g.k, val);
  out.k = g.k + h.k;
  wreath_normalize(out);
  return out;
}

WreathElement w_inv(const WreathElement& g) {
  WreathElement out = w_identity(g.mod);
  out.k = -g.k;
  out.f.reserve(g.f.size());
  for (const auto& [pos, val] : g.f) out.f.emplace_back(pos - g.k, -val);
  wreath_normalize(out);
  return out;
}

WreathElement w_pow(const WreathElement& g, long n) {
  WreathElement base = n < 0 ? w_inv(g) : g;
  unsigned long m = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  WreathElement acc = w_identity(g.mod);
  while (m) {
    if (m & 1) acc = w_mul(acc, base);
    m >>= 1;
    if (m) base = w_mul(base, base);
  }
  return acc;
}

WreathElement w_reduce_mod(const WreathElement& g, long n) {
  require(n >= 2, ErrorKind::InvalidParameter, "target modulus must be >= 2");
  require(g.mod == 0 || g.mod % n == 0, ErrorKind::InvalidParameter,
          "mod-n reduction needs n | m");
  WreathElement out = g;
  out.mod = n;
  wreath_normalize(out);
  return out;
}

WreathElement w_parse(const std::string& text, long mod) {
  std::string s = trim_copy(text);
  std::size_t close = s.find('}');
  require(!s.empty() && s.front() == '{' && close != std::string::npos, ErrorKind::MalformedInput,
          "wreath literal must look like {pos:val, ...}@k");
  std::size_t at = s.find('@', close);
  require(at != std::string::npos && at + 1 < s.size(), ErrorKind::MalformedInput,
          "wreath literal is missing @shift");
  require(trim_copy(s.substr(close + 1, at - close - 1)).empty(), ErrorKind::MalformedInput,
          "unexpected text between } and @");
  WreathElement g = w_identity(mod);
  g.k = parse_long(s.substr(at + 1), "wreath shift");
  std::string body = trim_copy(s.substr(1, close - 1));
  if (!body.empty()) {
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string item = body.substr(start, comma == std::string::npos ? comma : comma - start);
      std::size_t colon = item.find(':');
      require(colon != std::string::npos, ErrorKind::MalformedInput,
              "wreath entry must be pos:val");
      g.f.emplace_back(parse_long(item.substr(0, colon), "lamp position"),
                       parse_long(item.substr(colon + 1), "lamp value"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  wreath_normalize(g);
  return g;
}

std::string w_format(const WreathElement& g) {
  std::string out = "{";
  for (std::size_t i = 0; i < g.f.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(g.f[i].first) + ":" + std::to_string(g.f[i].second);
  }
  out += "}@" + std::to_string(g.k);
  return out;
}

std::string w_key(const WreathElement& g) { return std::to_string(g.mod) + "|" + w_format(g); }

long epsilon(const WreathElement& g) { return g.k; }

std::array<double, 4> phi_xi_matrix(const WreathElement& g, double xi) {
  require(g.mod == 0, ErrorKind::InvalidParameter, "phi_xi is defined on Z wr Z");
  require(xi > 0.0, ErrorKind::InvalidParameter, "xi must be positive");
  double T = 0.0;
  for (const auto& [pos, val] : g.f)
    T += static_cast<double>(val) * std::pow(xi, static_cast<double>(pos));
  double s = std::pow(xi, 0.5 * static_cast<double>(g.k));
  return {s, T / s, 0.0, 1.0 / s};
}

ZdElement zd_identity(std::size_t d, long mod) {
  return ZdElement{std::vector<long>(d, 0), mod};
}

ZdElement zd_make(std::vector<long> v, long mod) {
  require(mod == 0 || mod >= 2, ErrorKind::InvalidParameter, "modulus must be 0 or >= 2");
  ZdElement g{std::move(v), mod};
  for (long& x : g.v) x = wreath_norm_val(x, mod);
  return g;
}

ZdElement zd_mul(const ZdElement& g, const ZdElement& h) {
  require(g.v.size() == h.v.size() && g.mod == h.mod, ErrorKind::InvalidParameter,
          "Z^d elements from different groups");
  ZdElement out = g;
  for (std::size_t i = 0; i < out.v.size(); ++i)
    out.v[i] = wreath_norm_val(out.v[i] + h.v[i], g.mod);
  return out;
}

ZdElement zd_inv(const ZdElement& g) {
  ZdElement out = g;
  for (long& x : out.v) x = wreath_norm_val(-x, g.mod);
  return out;
}

ZdElement zd_pow(const ZdElement& g, long n) {
  ZdElement out = g;
  for (long& x : out.v) x = wreath_norm_val(x * n, g.mod);
  return out;
}

std::string zd_key(const ZdElement& g) {
  std::string out = std::to_string(g.mod) + "|(";
  for (std::size_t i = 0; i < g.v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g.v[i]);
  }
  return out + ")";
}

namespace {

template <class F>
GroupElement ge_binary(const GroupElement& g, const GroupElement& h, F&& f) {
  require(g.index() == h.index(), ErrorKind::InvalidParameter,
          "group elements from different groups");
  return std::visit(
      [&](const auto& x) -> GroupElement {
        using T = std::decay_t<decltype(x)>;
        return f(x, std::get<T>(h));
      },
      g);
}

}  // namespace

GroupElement ge_mul(const GroupElement& g, const GroupElement& h) {
  return ge_binary(g, h, [](const auto& x, const auto& y) -> GroupElement {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, Word>)
      return concat_reduced(x, y);
    else if constexpr (std::is_same_v<T, BsElement>)
      return bs_mul(x, y);
    else if constexpr (std::is_same_v<T, WreathElement>)
      return w_mul(x, y);
    else
      return zd_mul(x, y);
  });
}

GroupElement ge_inv(const GroupElement& g) {
  return std::visit(
      [](const auto& x) -> GroupElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Word>)
          return inverse(x);
        else if constexpr (std::is_same_v<T, BsElement>)
          return bs_inv(x);
        else if constexpr (std::is_same_v<T, WreathElement>)
          return w_inv(x);
        else
          return zd_inv(x);
      },
      g);
}

GroupElement ge_pow(const GroupElement& g, long n) {
  return std::visit(
      [n](const auto& x) -> GroupElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Word>)
          return power(x, n);
        else if constexpr (std::is_same_v<T, BsElement>)
          return bs_pow(x, n);
        else if constexpr (std::is_same_v<T, WreathElement>)
          return w_pow(x, n);
        else
          return zd_pow(x, n);
      },
      g);
}

GroupElement ge_identity_like(const GroupElement& g) {
  return std::visit(
      [](const auto& x) -> GroupElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Word>)
          return Word{};
        else if constexpr (std::is_same_v<T, BsElement>)
          return bs_identity();
        else if constexpr (std::is_same_v<T, WreathElement>)
          return w_identity(x.mod);
        else
          return zd_identity(x.v.size(), x.mod);
      },
      g);
}

bool ge_is_identity(const GroupElement& g) {
  return ge_key(g) == ge_key(ge_identity_like(g));
}

std::string ge_key(const GroupElement& g) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Word>) {
          std::string out = "w|";
          for (const Letter& l : x) {
            out += std::to_string(l.sym);
            if (l.inv) out += '\'';
            out += '.';
          }
          return out;
        } else if constexpr (std::is_same_v<T, BsElement>) {
          return "bs|" + bs_key(x);
        } else if constexpr (std::is_same_v<T, WreathElement>) {
          return "wr|" + w_key(x);
        } else {
          return "zd|" + zd_key(x);
        }
      },
      g);
}

std::string ge_to_string(const GroupElement& g) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Word>) {
          return format_word(x, abc_alphabet());
        } else if constexpr (std::is_same_v<T, BsElement>) {
          return bs_format(x);
        } else if constexpr (std::is_same_v<T, WreathElement>) {
          return w_format(x);
        } else {
          std::string out = "(";
          for (std::size_t i = 0; i < x.v.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(x.v[i]);
          }
          return out + ")";
        }
      },
      g);
}

}  // namespace hyp
