#include "hypstruct/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hyp {

std::size_t Alphabet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  fail(ErrorKind::MalformedInput, "unknown letter '" + std::string(name) + "'");
}

const Alphabet& ab_alphabet() {
  static const Alphabet a{{"a", "b"}};
  return a;
}

const Alphabet& abc_alphabet() {
  static const Alphabet a{{"a", "b", "c"}};
  return a;
}

Word parse_word(std::string_view text, const Alphabet& alpha) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string_view t = tok;
    std::size_t caret = t.find('^');
    long long exp = 1;
    if (caret != std::string_view::npos) {
      std::string etxt(t.substr(caret + 1));
      try {
        std::size_t used = 0;
        exp = std::stoll(etxt, &used);
        require(used == etxt.size(), ErrorKind::MalformedInput, "bad exponent in '" + tok + "'");
      } catch (const Error&) {
        throw;
      } catch (...) {
        fail(ErrorKind::MalformedInput, "bad exponent in '" + tok + "'");
      }
      t = t.substr(0, caret);
    }
    bool inv = false;
    if (!t.empty() && t.back() == '\'') {
      inv = true;
      t = t.substr(0, t.size() - 1);
    }
    require(!t.empty(), ErrorKind::MalformedInput, "empty letter in '" + tok + "'");
    Letter base{static_cast<std::uint8_t>(alpha.index(t)), inv};
    if (exp < 0) {
      base = inverse(base);
      exp = -exp;
    }
    for (long long i = 0; i < exp; ++i) out.push_back(base);
  }
  return out;
}

std::string format_word(const Word& w, const Alphabet& alpha) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    require(w[i].sym < alpha.size(), ErrorKind::InvalidParameter, "letter outside alphabet");
    out += alpha.names[w[i].sym];
    if (w[i].inv) out += '\'';
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse(w[i - 1])) return false;
  return true;
}

Word reduced(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& x : w) {
    if (!out.empty() && out.back() == inverse(x))
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word concat_reduced(const Word& u, const Word& v) {
  Word out = u;
  for (const Letter& x : v) {
    if (!out.empty() && out.back() == inverse(x))
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word power(const Word& w, long long e) {
  Word base = e < 0 ? inverse(w) : w;
  if (e < 0) e = -e;
  Word out;
  for (long long i = 0; i < e; ++i) out = concat_reduced(out, base);
  return out;
}

bool is_positive(const Word& w) {
  return std::none_of(w.begin(), w.end(), [](const Letter& x) { return x.inv; });
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != inverse(w.back());
}

Word cyclically_reduced(Word w) {
  w = reduced(w);
  while (w.size() >= 2 && w.front() == inverse(w.back())) {
    w.erase(w.begin());
    w.pop_back();
    w = reduced(w);
  }
  return w;
}

std::vector<Word> cyclic_shifts(const Word& w) {
  require(is_cyclically_reduced(w), ErrorKind::Precondition,
          "cyclic_shifts requires a cyclically reduced word");
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t r = 0; r < w.size(); ++r) {
    Word s(w.begin() + r, w.end());
    s.insert(s.end(), w.begin(), w.begin() + r);
    out.push_back(std::move(s));
  }
  if (w.empty()) out.push_back(w);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_l_power(const Word& w, int l) {
  require(l >= 1, ErrorKind::InvalidParameter, "aperiodicity exponent must be >= 1");
  const std::size_t n = w.size();
  const std::size_t ul = static_cast<std::size_t>(l);
  // w[i .. i+p*l) equals v^l with |v| = p iff w[j] == w[j+p] on the first
  // p*(l-1) positions of that window.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 1; i + p * ul <= n; ++p) {
      bool hit = true;
      for (std::size_t j = i; j < i + p * (ul - 1); ++j) {
        if (!(w[j] == w[j + p])) {
          hit = false;
          break;
        }
      }
      if (hit) return std::make_pair(i, p);
    }
  }
  return std::nullopt;
}

bool is_l_aperiodic(const Word& w, int l) { return !find_l_power(w, l).has_value(); }

std::string to_syms(const Word& w) {
  require(is_positive(w), ErrorKind::Precondition, "to_syms requires a positive word");
  std::string s;
  s.reserve(w.size());
  for (const Letter& x : w) s.push_back(static_cast<char>(x.sym));
  return s;
}

Word from_syms(std::string_view s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) w.push_back(Letter{static_cast<std::uint8_t>(c), false});
  return w;
}

}  // namespace hyp
