#include "hypstruct/pseudochar.hpp"

#include <algorithm>
#include <cmath>

namespace hyp {

double defect_estimate(const QuasiCharacter& q,
                       const std::vector<std::pair<GroupElement, GroupElement>>& pairs) {
  require(!pairs.empty(), ErrorKind::InvalidParameter, "defect estimate needs pairs");
  double worst = 0.0;
  for (const auto& [g, h] : pairs)
    worst = std::max(worst, std::abs(q.eval(ge_mul(g, h)) - q.eval(g) - q.eval(h)));
  return worst;
}

Bracket homogenize(const QuasiCharacter& q, const GroupElement& g, long n_max) {
  require(n_max >= 1, ErrorKind::InvalidParameter, "n_max must be >= 1");
  require(q.defect_bound >= 0.0, ErrorKind::InvalidParameter, "defect bound must be >= 0");
  double center = q.eval(ge_pow(g, n_max)) / static_cast<double>(n_max);
  double slack = q.defect_bound / static_cast<double>(n_max);
  return {center - slack, center + slack};
}

std::vector<std::complex<double>> dyadic_ray(int n_max) {
  require(n_max >= 0, ErrorKind::InvalidParameter, "n_max must be >= 0");
  std::vector<std::complex<double>> ray;
  for (int n = 0; n <= n_max; ++n) ray.emplace_back(0.0, std::ldexp(1.0, n));
  return ray;
}

BusemannEstimate busemann_estimate(const HalfPlaneModel& A, const GroupElement& g,
                                   const std::vector<std::complex<double>>& ray, int window) {
  require(window >= 1 && static_cast<std::size_t>(window) <= ray.size(),
          ErrorKind::InvalidParameter, "window must fit inside the ray");
  std::complex<double> x0 = ray.front();
  std::complex<double> gx0 = A.apply(g, x0);
  double sum = 0.0, lo = 0.0, hi = 0.0;
  for (int i = 0; i < window; ++i) {
    std::complex<double> xn = ray[ray.size() - static_cast<std::size_t>(window) + static_cast<std::size_t>(i)];
    double h = h2_dist(xn, x0) - h2_dist(xn, gx0);
    sum += h;
    if (i == 0) {
      lo = hi = h;
    } else {
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
  }
  return {sum / window, hi - lo};
}

LengthBracket lineal_length_bracket(const LinealGenSet& X, const GroupElement& g) {
  double D = X.p.defect_bound;
  require(D >= 0.0 && D <= X.C / 2.0, ErrorKind::InvalidParameter,
          "need defect bound in [0, C/2]");
  double px = X.p.eval(X.x);
  require(px > 0.0 && px < X.C / 2.0, ErrorKind::InvalidParameter,
          "designated element must have p(x) in (0, C/2)");
  if (ge_is_identity(g)) return {0, 0};
  double pg = std::abs(X.p.eval(g));
  if (pg < X.C) return {1, 1};
  LengthBracket b;
  b.lb = static_cast<long>(std::ceil(pg / (X.C + D) - 1e-12));
  b.ub = static_cast<long>(std::floor(pg / px + 1e-12)) + 2;
  require(b.lb <= b.ub, ErrorKind::Internal, "length bracket inverted");
  return b;
}

namespace {

// Generator of the value group {<coef, v> : v in Z^d} = step Z.
mpq_class value_group_step(const std::vector<mpq_class>& coef) {
  mpz_class den_lcm = 1;
  for (const mpq_class& c : coef)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_class g = 0;
  for (const mpq_class& c : coef) {
    mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  mpq_class step(g, den_lcm);
  step.canonicalize();
  return step;
}

// Largest multiple of step strictly below C, as a count of steps.
mpz_class steps_below(const mpq_class& step, const mpq_class& C) {
  mpq_class ratio = C / step;
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
  if (k * ratio.get_den() == ratio.get_num()) k -= 1;  // C itself is excluded
  return k;
}

}  // namespace

long zd_exact_length(const std::vector<mpq_class>& coef, const mpq_class& C,
                     const std::vector<long>& g) {
  require(!coef.empty() && coef.size() == g.size(), ErrorKind::InvalidParameter,
          "coefficient and vector dimensions must match");
  require(C > 0, ErrorKind::InvalidParameter, "C must be positive");
  mpq_class step = value_group_step(coef);
  require(step > 0, ErrorKind::InvalidParameter, "the form must be non-zero");
  mpz_class k = steps_below(step, C);
  require(k >= 1, ErrorKind::InvalidParameter, "C admits no positive generator value");

  mpq_class p = 0;
  bool zero_vec = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    p += coef[i] * g[i];
    if (g[i] != 0) zero_vec = false;
  }
  if (zero_vec) return 0;
  if (p < 0) p = -p;
  mpq_class s_max = step * k;
  if (p < C) return 1;
  mpq_class ratio = p / s_max;
  mpz_class n;
  mpz_cdiv_q(n.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
  require(n.fits_slong_p(), ErrorKind::BudgetExceeded, "exact length does not fit in a long");
  return n.get_si();
}

AntichainCertificate antichain_certificate(const mpq_class& lambda, const mpq_class& mu,
                                           const mpq_class& C, int i_max) {
  require(lambda > 0 && lambda < 1 && mu > 0 && mu < 1, ErrorKind::InvalidParameter,
          "lambda and mu must lie in (0, 1)");
  require(lambda != mu, ErrorKind::InvalidParameter, "lambda and mu must differ");
  require(C > 2, ErrorKind::InvalidParameter, "need C > 2 so that p_t(1,1) = 1 < C/2");
  require(i_max >= 1, ErrorKind::InvalidParameter, "i_max must be >= 1");

  AntichainCertificate cert;
  cert.lambda = lambda.get_str();
  cert.mu = mu.get_str();
  cert.C = C.get_str();
  cert.x = "(1,1)";

  auto coeffs = [](const mpq_class& t) {
    return std::vector<mpq_class>{t, mpq_class(1) - t};
  };
  // p_t(1,1) = 1 for every t, so (1,1) serves as the designated generator of
  // both sets.
  cert.p_lambda_x = "1";
  cert.p_mu_x = "1";

  // Primitive kernel vector of p_t: with t = a/q in lowest terms,
  // z = ((q-a)/g, -a/g) where g = gcd(a, q-a).
  auto kernel_vec = [](const mpq_class& t) {
    mpz_class a = t.get_num(), q = t.get_den();
    mpz_class ga;
    mpz_class qa = q - a;
    mpz_gcd(ga.get_mpz_t(), a.get_mpz_t(), qa.get_mpz_t());
    mpz_class m = qa / ga, n = -a / ga;
    require(m.fits_slong_p() && n.fits_slong_p(), ErrorKind::BudgetExceeded,
            "kernel vector does not fit in a long");
    return std::vector<long>{m.get_si(), n.get_si()};
  };

  auto side = [&](const mpq_class& null_t, const mpq_class& other_t,
                  std::vector<AntichainCertificate::Row>& rows) {
    std::vector<long> z1 = kernel_vec(null_t);
    std::vector<mpq_class> own = coeffs(null_t), other = coeffs(other_t);
    long stride = std::max(1, i_max / 10);
    long prev_exact = 0;
    for (long i = 1; i <= i_max; ++i) {
      if (!(i <= 10 || i % stride == 0 || i == i_max)) continue;
      std::vector<long> z{z1[0] * i, z1[1] * i};
      mpq_class p_other = other[0] * z[0] + other[1] * z[1];
      mpq_class p_abs = p_other < 0 ? mpq_class(-p_other) : p_other;
      AntichainCertificate::Row row;
      row.i = i;
      row.z = "(" + std::to_string(z[0]) + "," + std::to_string(z[1]) + ")";
      row.p_other = p_other.get_str();
      row.len_own = zd_exact_length(own, C, z);
      mpq_class lb_ratio = p_abs / C;
      mpz_class lb;
      mpz_cdiv_q(lb.get_mpz_t(), lb_ratio.get_num().get_mpz_t(), lb_ratio.get_den().get_mpz_t());
      row.lb_other = lb.get_si();
      row.exact_other = zd_exact_length(other, C, z);
      if (row.len_own != 1 || row.exact_other < prev_exact || row.lb_other > row.exact_other)
        cert.ok = false;
      prev_exact = row.exact_other;
      rows.push_back(std::move(row));
    }
    // Unbounded growth: the other-side length must have moved past any fixed
    // bound attainable by the null side's lengths (all equal to 1).
    if (rows.empty() || rows.back().exact_other <= rows.front().exact_other ||
        rows.back().exact_other < 10)
      cert.ok = false;
  };

  side(lambda, mu, cert.null_lambda);
  side(mu, lambda, cert.null_mu);
  cert.verdict = cert.ok ? "incomparable (exact word lengths diverge both ways)"
                         : "inconclusive";
  return cert;
}

}  // namespace hyp
