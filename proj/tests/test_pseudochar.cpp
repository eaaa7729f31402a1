#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "hypstruct/pseudochar.hpp"
#include "hypstruct/rng.hpp"

using namespace hyp;

namespace {

long zval(const GroupElement& g) { return std::get<ZdElement>(g).v[0]; }

QuasiCharacter sin_perturbed() {
  QuasiCharacter q;
  q.eval = [](const GroupElement& g) {
    double n = static_cast<double>(zval(g));
    return n + std::sin(n);
  };
  // |sin(x+y) - sin x - sin y| <= 3 always (and 3 sqrt(3)/2 at worst).
  q.defect_bound = 3.0;
  return q;
}

}  // namespace

TEST_CASE("defect estimate and homogenization on Z") {
  QuasiCharacter q = sin_perturbed();
  Rng rng(71);
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  for (int i = 0; i < 500; ++i) {
    pairs.emplace_back(GroupElement{zd_make({rng.range(-1000, 1000)})},
                       GroupElement{zd_make({rng.range(-1000, 1000)})});
  }
  double d = defect_estimate(q, pairs);
  CHECK(d > 0.0);
  CHECK(d <= 3.0 * std::sqrt(3.0) / 2.0 + 1e-12);

  // Homogenization kills the bounded perturbation: p(1) = 1.
  Bracket b = homogenize(q, GroupElement{zd_make({1})}, 1000000);
  CHECK(b.lo <= 1.0);
  CHECK(b.hi >= 1.0);
  CHECK(b.hi - b.lo <= 2.0 * q.defect_bound / 1e6 + 1e-12);
  CHECK(b.hi - b.lo >= 0.0);

  CHECK_THROWS_AS(homogenize(q, GroupElement{zd_make({1})}, 0), Error);
}

TEST_CASE("busemann estimate recovers epsilon * ln 2 on BS(1,2)") {
  HalfPlaneModel H = HalfPlaneModel::bs();
  std::vector<std::complex<double>> ray = dyadic_ray(40);
  REQUIRE(ray.size() == 41);
  CHECK(ray[0] == std::complex<double>(0, 1));

  BusemannEstimate qb = busemann_estimate(H, GroupElement{bs_b(1)}, ray, 5);
  CHECK(qb.value == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  CHECK(qb.spread <= 1e-9);

  BusemannEstimate qa = busemann_estimate(H, GroupElement{bs_a(1)}, ray, 5);
  CHECK(qa.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));

  Rng rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    BsElement g = bs_identity();
    for (int i = 0; i < 8; ++i) {
      switch (rng.below(4)) {
        case 0: g = bs_mul(g, bs_a(1)); break;
        case 1: g = bs_mul(g, bs_a(-1)); break;
        case 2: g = bs_mul(g, bs_b(1)); break;
        default: g = bs_mul(g, bs_b(-1)); break;
      }
    }
    BusemannEstimate est = busemann_estimate(H, GroupElement{g}, ray, 5);
    CHECK(est.value == doctest::Approx(std::log(2.0) * epsilon(g)).scale(1.0).epsilon(1e-6));
  }

  CHECK_THROWS_AS(busemann_estimate(H, GroupElement{bs_b(1)}, ray, 0), Error);
  CHECK_THROWS_AS(busemann_estimate(H, GroupElement{bs_b(1)}, {}, 3), Error);
}

TEST_CASE("lineal length bracket on Z^2") {
  // p(m, n) = m is a homomorphism, defect 0.
  LinealGenSet X;
  X.p.eval = [](const GroupElement& g) {
    return static_cast<double>(std::get<ZdElement>(g).v[0]);
  };
  X.p.defect_bound = 0.0;
  X.C = 3.0;
  X.x = GroupElement{zd_make({1, 0})};

  LengthBracket id = lineal_length_bracket(X, GroupElement{zd_make({0, 0})});
  CHECK(id.lb == 0);
  CHECK(id.ub == 0);

  // p(g) inside (-C, C): g is itself a generator.
  LengthBracket one = lineal_length_bracket(X, GroupElement{zd_make({2, -5})});
  CHECK(one.lb == 1);
  CHECK(one.ub == 1);
  LengthBracket ker = lineal_length_bracket(X, GroupElement{zd_make({0, 7})});
  CHECK(ker.lb == 1);
  CHECK(ker.ub == 1);

  LengthBracket big = lineal_length_bracket(X, GroupElement{zd_make({10, 3})});
  CHECK(big.lb == 4);   // ceil(10 / (C + D)) = ceil(10/3)
  CHECK(big.ub == 12);  // floor(10 / p(x)) + 2

  // Exact length lies inside the bracket on a grid of elements.
  for (long m = -50; m <= 50; ++m) {
    GroupElement g{zd_make({m, (m * 7) % 3})};
    LengthBracket br = lineal_length_bracket(X, g);
    long exact = zd_exact_length({mpq_class(1), mpq_class(0)}, mpq_class(3), {m, (m * 7) % 3});
    CHECK(br.lb <= exact);
    CHECK(exact <= br.ub);
  }

  // Validation: p(x) must sit in (0, C/2), the defect below C/2.
  LinealGenSet bad = X;
  bad.x = GroupElement{zd_make({2, 0})};  // p(x) = 2 >= C/2
  CHECK_THROWS_AS(lineal_length_bracket(bad, GroupElement{zd_make({1, 0})}), Error);
  bad = X;
  bad.p.defect_bound = 2.0;
  CHECK_THROWS_AS(lineal_length_bracket(bad, GroupElement{zd_make({1, 0})}), Error);
}

TEST_CASE("exact Z^d word lengths") {
  using Q = mpq_class;
  // X = {v : |v_1| < 3}: the step is 1, the largest value below 3 is 2.
  CHECK(zd_exact_length({Q(1), Q(0)}, Q(3), {0, 0}) == 0);
  CHECK(zd_exact_length({Q(1), Q(0)}, Q(3), {0, 9}) == 1);  // inside X
  CHECK(zd_exact_length({Q(1), Q(0)}, Q(3), {2, -1}) == 1);
  CHECK(zd_exact_length({Q(1), Q(0)}, Q(3), {10, 0}) == 5);
  CHECK(zd_exact_length({Q(1), Q(0)}, Q(3), {-10, 0}) == 5);

  // Rational form (3m + 7n)/10 with C = 3: values step 1/10, max 29/10.
  CHECK(zd_exact_length({Q(3, 10), Q(7, 10)}, Q(3), {100, 100}) ==
        35);  // |p| = 100, ceil(1000/29)
  CHECK(zd_exact_length({Q(3, 10), Q(7, 10)}, Q(3), {7, -3}) == 1);  // kernel vector

  // C at or below the step leaves no usable generator.
  CHECK_THROWS_AS(zd_exact_length({Q(1)}, Q(1), {5}), Error);
  CHECK_THROWS_AS(zd_exact_length({Q(1)}, Q(1, 2), {5}), Error);
  CHECK_THROWS_AS(zd_exact_length({Q(0), Q(0)}, Q(3), {1, 1}), Error);  // zero form
  CHECK_THROWS_AS(zd_exact_length({Q(1)}, Q(3), {1, 2}), Error);        // dimension mismatch

  // Brute-force cross-check in one dimension: graph distance in Z with
  // generator steps {1, 2} equals ceil(|g|/2).
  for (long v = -40; v <= 40; ++v) {
    long expect = (std::labs(v) + 1) / 2;
    CHECK(zd_exact_length({Q(1)}, Q(3), {v}) == expect);
  }
}

TEST_CASE("antichain certificate for the lambda/mu pencil") {
  AntichainCertificate cert = antichain_certificate(mpq_class(3, 10), mpq_class(7, 10),
                                                    mpq_class(3), 100);
  CHECK(cert.ok);
  CHECK(cert.lambda == "3/10");
  CHECK(cert.mu == "7/10");
  CHECK(cert.p_lambda_x == "1");
  CHECK(cert.p_mu_x == "1");
  CHECK(cert.verdict == "incomparable (exact word lengths diverge both ways)");

  REQUIRE_FALSE(cert.null_lambda.empty());
  REQUIRE_FALSE(cert.null_mu.empty());

  const auto& last = cert.null_lambda.back();
  CHECK(last.i == 100);
  CHECK(last.z == "(700,-300)");
  CHECK(last.p_other == "400");
  CHECK(last.len_own == 1);
  CHECK(last.lb_other == 134);    // ceil(400/3)
  CHECK(last.exact_other == 138); // ceil(4000/29)

  long prev_lambda = 0, prev_mu = 0;
  for (const auto& row : cert.null_lambda) {
    CHECK(row.len_own == 1);
    CHECK(row.lb_other <= row.exact_other);
    CHECK(row.exact_other >= prev_lambda);
    prev_lambda = row.exact_other;
  }
  for (const auto& row : cert.null_mu) {
    CHECK(row.len_own == 1);
    CHECK(row.lb_other <= row.exact_other);
    CHECK(row.exact_other >= prev_mu);
    prev_mu = row.exact_other;
  }
  // Both sides reach the same terminal growth by symmetry of the pencil.
  CHECK(cert.null_mu.back().exact_other == 138);

  CHECK_THROWS_AS(antichain_certificate(mpq_class(1, 2), mpq_class(1, 2), mpq_class(3), 10),
                  Error);
  CHECK_THROWS_AS(antichain_certificate(mpq_class(3, 10), mpq_class(7, 10), mpq_class(0), 10),
                  Error);
  CHECK_THROWS_AS(antichain_certificate(mpq_class(3, 10), mpq_class(7, 10), mpq_class(3), 0),
                  Error);
}
