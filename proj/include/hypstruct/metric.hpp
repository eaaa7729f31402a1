#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hypstruct/errors.hpp"

namespace hyp {

// Finite sample of a metric space as a symmetric distance matrix. Validated
// on construction: zero diagonal, symmetry, non-negativity, triangle
// inequality (absolute tolerance 1e-9, or exactly when exact = true).
struct PointCloud {
  std::size_t n = 0;
  std::vector<double> d;  // row-major n*n
  bool exact = false;     // entries are exact integers; validate with zero tolerance

  double at(std::size_t i, std::size_t j) const { return d[i * n + j]; }

  static PointCloud from_matrix(std::size_t n, std::vector<double> entries, bool exact = false);
};

// (x|y)_z = (d(x,z) + d(y,z) - d(x,y)) / 2.
double gromov_product(std::size_t x, std::size_t y, std::size_t z, const PointCloud& P);

struct DeltaEstimate {
  double delta = 0.0;
  std::array<std::size_t, 4> witness{0, 0, 0, 0};  // x, y, z, basepoint t
  bool exhaustive = true;
  std::uint64_t checked = 0;   // quadruples evaluated
  std::uint64_t seed = 0;      // sampling seed (0 and unused when exhaustive)
  // Lemma: a delta-hyperbolic space satisfies the four-point inequality with
  // 8*delta, so the measured value only bounds the Rips constant from below.
  double rips_delta_lower = 0.0;
};

// Least delta' >= 0 with (x|z)_t >= min{(x|y)_t, (y|z)_t} - delta' over all
// ordered quadruples. Exhaustive for n <= 200; beyond that a seeded sample of
// 10^6 quadruples (then the result is a lower bound for the true maximum).
DeltaEstimate four_point_delta(const PointCloud& P, std::uint64_t seed = 0);

struct HausdorffReport {
  double dist = 0.0;
  // Farthest point of A from B with its nearest partner, and vice versa.
  std::size_t a_far = 0, a_near = 0;
  std::size_t b_far = 0, b_near = 0;
};

HausdorffReport hausdorff(const std::vector<std::size_t>& A, const std::vector<std::size_t>& B,
                          const PointCloud& P);

struct BrokenChainReport {
  bool hypotheses_ok = false;
  std::string hypothesis_note;  // which hypothesis failed, if any
  double max_product = 0.0;     // max interior Gromov product (vs C)
  double min_gap = 0.0;         // min consecutive distance (vs 2C + 16 delta)
  double gap_required = 0.0;
  bool holds = false;   // conclusion, only meaningful when hypotheses_ok
  double lhs = 0.0;     // d(x_0, x_n)
  double rhs = 0.0;     // sum of gaps - 2(n-1)(C + 8 delta)
  double margin = 0.0;  // lhs - rhs
  double sum_gaps = 0.0;
};

// Broken-geodesic lower bound: if (x_{i-1}|x_{i+1})_{x_i} <= C at interior
// points and every gap exceeds 2C + 16 delta, then
// d(x_0, x_n) >= sum gaps - 2(n-1)(C + 8 delta).
BrokenChainReport broken_chain_check(const std::vector<std::size_t>& chain, double C,
                                     double delta, const PointCloud& P);

struct ComparisonCertificate {
  double C = 0.0;
  std::string direction;
  bool holds = true;
  struct WitnessPair {
    std::size_t u = 0, v = 0;
    double lhs = 0.0, rhs = 0.0;
  };
  // Tightest pair per inequality; on failure the violating pair comes first.
  std::vector<WitnessPair> witnesses;
};

struct OrbitGraph {
  std::size_t n = 0;
  double rho = 0.0, threshold = 0.0;  // threshold = 2 rho + 1
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<int>> graph_dist;  // BFS metric
  ComparisonCertificate cert;  // d(u,v) <= (2rho+1) d_Gamma(u,v), d_Gamma(u,v) <= ceil(d(u,v))
};

OrbitGraph orbit_graph(const PointCloud& P, double rho);

}  // namespace hyp
