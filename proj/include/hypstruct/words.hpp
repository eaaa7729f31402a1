#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypstruct/errors.hpp"

namespace hyp {

// A letter of a free group word: alphabet symbol index plus a sign.
struct Letter {
  std::uint8_t sym = 0;
  bool inv = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter x) { return Letter{x.sym, !x.inv}; }

using Word = std::vector<Letter>;

struct Alphabet {
  std::vector<std::string> names;

  std::size_t index(std::string_view name) const;
  std::size_t size() const { return names.size(); }
};

const Alphabet& ab_alphabet();   // {a, b}
const Alphabet& abc_alphabet();  // {a, b, c}

// Word syntax: whitespace-separated letters, trailing apostrophe for the
// inverse, optional exponent shorthand on input ("a b' a", "a^6", "b'^3").
// format_word never emits exponents.
Word parse_word(std::string_view text, const Alphabet& alpha);
std::string format_word(const Word& w, const Alphabet& alpha);

bool is_reduced(const Word& w);
Word reduced(const Word& w);                    // free reduction
Word inverse(const Word& w);
Word concat_reduced(const Word& u, const Word& v);  // u * v, freely reduced
Word power(const Word& w, long long e);             // w^e, freely reduced

bool is_positive(const Word& w);

bool is_cyclically_reduced(const Word& w);
Word cyclically_reduced(Word w);

// All left rotations of w, in order; w must be cyclically reduced.
std::vector<Word> cyclic_shifts(const Word& w);

// A word is l-aperiodic when it has no non-empty contiguous subword of the
// form v^l. find_l_power returns the earliest witness (start, period).
std::optional<std::pair<std::size_t, std::size_t>> find_l_power(const Word& w, int l);
bool is_l_aperiodic(const Word& w, int l);

// Positive words as plain symbol-index strings (one char per letter), used by
// the enumeration and search code paths.
std::string to_syms(const Word& w);        // requires positive
Word from_syms(std::string_view s);

}  // namespace hyp
