#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hypstruct/actions.hpp"
#include "hypstruct/groups.hpp"

namespace hyp {

// Real-valued function on a group with a declared defect bound
// |q(gh) - q(g) - q(h)| <= defect_bound.
struct QuasiCharacter {
  std::function<double(const GroupElement&)> eval;
  double defect_bound = 0.0;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

// Largest defect |q(gh) - q(g) - q(h)| over the given pairs.
double defect_estimate(const QuasiCharacter& q,
                       const std::vector<std::pair<GroupElement, GroupElement>>& pairs);

// Bracket for the homogenization lim q(g^n)/n, evaluated at n = n_max:
// the limit lies in [q(g^n)/n - D/n, q(g^n)/n + D/n].
Bracket homogenize(const QuasiCharacter& q, const GroupElement& g, long n_max);

// Points 2^n i for n = 0..n_max, a discrete ray to the boundary point infinity.
std::vector<std::complex<double>> dyadic_ray(int n_max);

struct BusemannEstimate {
  double value = 0.0;   // mean of d(x_n, x_0) - d(x_n, g x_0) over the window
  double spread = 0.0;  // max - min over the window
};

// Busemann cocycle toward the endpoint of the ray, estimated from the last
// `window` ray points.
BusemannEstimate busemann_estimate(const HalfPlaneModel& A, const GroupElement& g,
                                   const std::vector<std::complex<double>>& ray, int window);

// Generating set X = {g : |p(g)| < C} of a pseudocharacter p (eval must be
// homogeneous; defect_bound <= C/2) together with a designated element x with
// p(x) in (0, C/2).
struct LinealGenSet {
  QuasiCharacter p;
  double C = 0.0;
  GroupElement x;
};

struct LengthBracket {
  long lb = 0;
  long ub = 0;
};

// Word-length bracket for g over X: lb = ceil(|p(g)|/(C+D)), and
// ub = floor(|p(g)|/p(x)) + 2 via splitting off a power of x.
LengthBracket lineal_length_bracket(const LinealGenSet& X, const GroupElement& g);

// Exact word length of g in X = {v in Z^d : |<coef, v>| < C}. The kernel of
// the form is contained in X, so only the value <coef, g> matters:
// length = ceil(|<coef, g>| / s_max) with s_max the largest value of the form
// strictly below C.
long zd_exact_length(const std::vector<mpq_class>& coef, const mpq_class& C,
                     const std::vector<long>& g);

// Certificate that the lineal structures from p_lambda and p_mu on Z^2 are
// incomparable, where p_t(m, n) = t m + (1 - t) n. For each side it exhibits
// multiples of a primitive kernel vector of one form whose exact word length
// in the other form's generating set grows without bound.
struct AntichainCertificate {
  std::string lambda, mu, C;
  std::string x;  // common basepoint generator, p_t(x) = 1 for every t
  std::string p_lambda_x, p_mu_x;
  struct Row {
    long i = 0;
    std::string z;           // i-th multiple of the kernel vector
    std::string p_other;     // value of the other form on z, exact rational
    long len_own = 0;        // exact length in the null side's generating set
    long lb_other = 0;       // ceil(|p_other| / C)
    long exact_other = 0;    // exact length in the other generating set
  };
  std::vector<Row> null_lambda;  // z in ker p_lambda, measured against p_mu
  std::vector<Row> null_mu;
  bool ok = true;
  std::string verdict;
};

AntichainCertificate antichain_certificate(const mpq_class& lambda, const mpq_class& mu,
                                           const mpq_class& C, int i_max);

}  // namespace hyp
