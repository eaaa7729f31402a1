#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hypstruct/errors.hpp"
#include "hypstruct/words.hpp"

namespace hyp {

// BS(1,2) = <a, b | b a b^-1 = a^2>, realized as Z[1/2] x| Z acting on the
// line by x -> r + 2^k x. Element = (r, k) with r = num / 2^e, kept canonical
// (e >= 0, and num odd whenever e > 0). epsilon(g) = k.
struct BsElement {
  mpz_class num = 0;
  long e = 0;
  long k = 0;

  bool operator==(const BsElement& o) const { return num == o.num && e == o.e && k == o.k; }
};

// Britton normal form b^-p a^m b^q; unique, and m is odd when p > 0 and q > 0.
struct BsBritton {
  long p = 0;
  mpz_class m = 0;
  long q = 0;
};

inline constexpr long kBsBitBudget = 10000;

BsElement bs_identity();
BsElement bs_a(long m = 1);  // a^m
BsElement bs_b(long k = 1);  // b^k
BsElement bs_mul(const BsElement& g, const BsElement& h);
BsElement bs_inv(const BsElement& g);
BsElement bs_pow(const BsElement& g, long n);
BsBritton bs_britton(const BsElement& g);
BsElement bs_from_word(const Word& w);          // over {a, b}
BsElement bs_parse(const std::string& text);    // word syntax, e.g. "b^-1 a^3 b^2"
std::string bs_format(const BsElement& g);      // Britton form, identity -> "a^0"
std::string bs_key(const BsElement& g);
long epsilon(const BsElement& g);

// Embedding into PSL(2,R): (r, k) -> [[2^{k/2}, r 2^{-k/2}], [0, 2^{-k/2}]],
// acting on the upper half-plane by z -> r + 2^k z. Row-major.
std::array<double, 4> bs_matrix(const BsElement& g);

// Z wr Z (mod = 0) and Z_n wr Z (mod = n >= 2): pairs (f, k) with f finitely
// supported, multiplication (f, k)(f', k') = (f + f'(. - k), k + k'). The
// stable letter t satisfies t a_i t^-1 = a_{i+1}. Support is stored sorted by
// position with zero values pruned; mod-n values lie in [1, n-1].
struct WreathElement {
  long mod = 0;
  std::vector<std::pair<long, long>> f;
  long k = 0;

  bool operator==(const WreathElement& o) const {
    return mod == o.mod && f == o.f && k == o.k;
  }
};

WreathElement w_identity(long mod = 0);
WreathElement w_lamp(long pos, long val, long mod = 0);  // a_pos^val
WreathElement w_shift(long k, long mod = 0);             // t^k
WreathElement w_mul(const WreathElement& g, const WreathElement& h);
WreathElement w_inv(const WreathElement& g);
WreathElement w_pow(const WreathElement& g, long n);
WreathElement w_reduce_mod(const WreathElement& g, long n);  // requires n >= 2, n | mod or mod = 0
WreathElement w_parse(const std::string& text, long mod = 0);  // "{-1:2, 3:1}@k"
std::string w_format(const WreathElement& g);
std::string w_key(const WreathElement& g);
long epsilon(const WreathElement& g);

// phi_xi: Z wr Z -> PSL(2,R), s -> diag(sqrt(xi), 1/sqrt(xi)), a_i -> [[1, xi^i], [0, 1]].
// (f, k) maps to [[xi^{k/2}, T xi^{-k/2}], [0, xi^{-k/2}]] with T = sum f(i) xi^i.
std::array<double, 4> phi_xi_matrix(const WreathElement& g, double xi);

// Z^d (mod = 0) or (Z_mod)^d, componentwise.
struct ZdElement {
  std::vector<long> v;
  long mod = 0;

  bool operator==(const ZdElement& o) const { return v == o.v && mod == o.mod; }
};

ZdElement zd_identity(std::size_t d, long mod = 0);
ZdElement zd_make(std::vector<long> v, long mod = 0);
ZdElement zd_mul(const ZdElement& g, const ZdElement& h);
ZdElement zd_inv(const ZdElement& g);
ZdElement zd_pow(const ZdElement& g, long n);
std::string zd_key(const ZdElement& g);

// Uniform element record for action models and the CLI.
using GroupElement = std::variant<Word, BsElement, WreathElement, ZdElement>;

GroupElement ge_mul(const GroupElement& g, const GroupElement& h);
GroupElement ge_inv(const GroupElement& g);
GroupElement ge_pow(const GroupElement& g, long n);
GroupElement ge_identity_like(const GroupElement& g);
bool ge_is_identity(const GroupElement& g);
std::string ge_key(const GroupElement& g);
std::string ge_to_string(const GroupElement& g);

}  // namespace hyp
