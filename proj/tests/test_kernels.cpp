#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include "hypstruct/kernels.hpp"
#include "hypstruct/rng.hpp"

using namespace hyp;

namespace {

double naive_quad_defect(const double* G, std::size_t n) {
  double best = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        double v = std::min(G[x * n + y], G[y * n + z]) - G[x * n + z];
        best = std::max(best, v);
      }
  return best;
}

std::size_t naive_lcs(const std::string& x, const std::string& y) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      std::size_t k = 0;
      while (i + k < x.size() && j + k < y.size() && x[i + k] == y[j + k]) ++k;
      best = std::max(best, k);
    }
  return best;
}

const unsigned char* uc(const std::string& s) {
  return reinterpret_cast<const unsigned char*>(s.data());
}

}  // namespace

TEST_CASE("scalar kernels match naive implementations") {
  const auto& k = kernels::scalar();
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng.below(15);
    std::vector<double> G(n * n);
    for (double& g : G) g = rng.uniform() * 8.0 - 1.0;
    CHECK(k.quad_defect(G.data(), n) == naive_quad_defect(G.data(), n));
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::string x, y;
    std::size_t nx = rng.below(60), ny = rng.below(60);
    for (std::size_t i = 0; i < nx; ++i) x.push_back(static_cast<char>(rng.below(2)));
    for (std::size_t i = 0; i < ny; ++i) y.push_back(static_cast<char>(rng.below(2)));
    CHECK(k.lcs_max(uc(x), x.size(), uc(y), y.size()) == naive_lcs(x, y));
  }
  CHECK(k.lcs_max(uc(""), 0, uc(""), 0) == 0);
  CHECK(k.quad_defect(nullptr, 0) == 0.0);
}

TEST_CASE("simd kernels agree bitwise with scalar") {
  const auto* v = kernels::avx2();
  if (v == nullptr) {
    MESSAGE("avx2 unavailable on this machine; dispatch equivalence skipped");
    CHECK(std::string(kernels::active().name) == "scalar");
    return;
  }
  const auto& s = kernels::scalar();
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng.below(33);  // crosses vector-width boundaries
    std::vector<double> G(n * n);
    for (double& g : G) g = rng.uniform() * 100.0 - 50.0;
    double a = s.quad_defect(G.data(), n);
    double b = v->quad_defect(G.data(), n);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  }
  for (int trial = 0; trial < 60; ++trial) {
    std::string x, y;
    std::size_t nx = rng.below(200), ny = rng.below(200);
    for (std::size_t i = 0; i < nx; ++i) x.push_back(static_cast<char>(rng.below(3)));
    for (std::size_t i = 0; i < ny; ++i) y.push_back(static_cast<char>(rng.below(3)));
    CHECK(s.lcs_max(uc(x), x.size(), uc(y), y.size()) == v->lcs_max(uc(x), x.size(), uc(y), y.size()));
  }
}

TEST_CASE("active dispatch is one of the variants") {
  const auto& a = kernels::active();
  std::string name = a.name;
  CHECK((name == "scalar" || name == "avx2"));
  if (kernels::avx2() == nullptr) CHECK(name == "scalar");
}
