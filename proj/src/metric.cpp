#include "hypstruct/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypstruct/kernels.hpp"
#include "hypstruct/rng.hpp"

namespace hyp {

namespace {

constexpr std::size_t kExhaustiveCutoff = 200;
constexpr std::uint64_t kSampleQuadruples = 1000000;
constexpr double kTol = 1e-9;

}  // namespace

PointCloud PointCloud::from_matrix(std::size_t n, std::vector<double> entries, bool exact) {
  require(n >= 1, ErrorKind::InvalidParameter, "point cloud needs at least one point");
  require(entries.size() == n * n, ErrorKind::MalformedInput, "distance matrix has wrong size");
  const double tol = exact ? 0.0 : kTol;
  for (std::size_t i = 0; i < n; ++i) {
    require(entries[i * n + i] == 0.0, ErrorKind::MalformedInput,
            "nonzero diagonal at point " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      double v = entries[i * n + j];
      require(std::isfinite(v) && v >= 0.0, ErrorKind::MalformedInput,
              "negative or non-finite distance at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
      if (exact)
        require(v == std::floor(v), ErrorKind::MalformedInput,
                "exact mode requires integer distances");
      require(std::abs(v - entries[j * n + i]) <= tol, ErrorKind::MalformedInput,
              "asymmetric matrix at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        require(entries[i * n + j] <= entries[i * n + k] + entries[k * n + j] + tol,
                ErrorKind::MalformedInput,
                "triangle inequality fails for (" + std::to_string(i) + "," + std::to_string(j) +
                    ") via " + std::to_string(k));
  PointCloud P;
  P.n = n;
  P.d = std::move(entries);
  P.exact = exact;
  return P;
}

double gromov_product(std::size_t x, std::size_t y, std::size_t z, const PointCloud& P) {
  require(x < P.n && y < P.n && z < P.n, ErrorKind::InvalidParameter, "point index out of range");
  return 0.5 * (P.at(x, z) + P.at(y, z) - P.at(x, y));
}

DeltaEstimate four_point_delta(const PointCloud& P, std::uint64_t seed) {
  DeltaEstimate est;
  const std::size_t n = P.n;
  if (n <= kExhaustiveCutoff) {
    const auto& kern = kernels::active();
    std::vector<double> G(n * n);
    double best = 0.0;
    std::size_t best_t = 0;
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          G[x * n + y] = 0.5 * (P.at(x, t) + P.at(y, t) - P.at(x, y));
      double v = kern.quad_defect(G.data(), n);
      if (v > best) {
        best = v;
        best_t = t;
      }
    }
    est.delta = best;
    est.exhaustive = true;
    est.checked = static_cast<std::uint64_t>(n) * n * n * n;
    if (best > 0.0) {
      // Recover a witness triple at the winning basepoint. The kernel's
      // arithmetic matches this scan exactly, so equality is safe.
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            double gxy = 0.5 * (P.at(x, best_t) + P.at(y, best_t) - P.at(x, y));
            double gyz = 0.5 * (P.at(y, best_t) + P.at(z, best_t) - P.at(y, z));
            double gxz = 0.5 * (P.at(x, best_t) + P.at(z, best_t) - P.at(x, z));
            if (std::min(gxy, gyz) - gxz == best) {
              est.witness = {x, y, z, best_t};
              est.rips_delta_lower = est.delta / 8.0;
              return est;
            }
          }
      fail(ErrorKind::Internal, "four-point witness rescan found no attaining quadruple");
    }
  } else {
    Rng rng(seed);
    est.exhaustive = false;
    est.seed = seed;
    est.checked = kSampleQuadruples;
    double best = 0.0;
    for (std::uint64_t q = 0; q < kSampleQuadruples; ++q) {
      std::size_t t = rng.below(n), x = rng.below(n), y = rng.below(n), z = rng.below(n);
      double gxy = 0.5 * (P.at(x, t) + P.at(y, t) - P.at(x, y));
      double gyz = 0.5 * (P.at(y, t) + P.at(z, t) - P.at(y, z));
      double gxz = 0.5 * (P.at(x, t) + P.at(z, t) - P.at(x, z));
      double v = std::min(gxy, gyz) - gxz;
      if (v > best) {
        best = v;
        est.witness = {x, y, z, t};
      }
    }
    est.delta = best;
  }
  est.rips_delta_lower = est.delta / 8.0;
  return est;
}

HausdorffReport hausdorff(const std::vector<std::size_t>& A, const std::vector<std::size_t>& B,
                          const PointCloud& P) {
  require(!A.empty() && !B.empty(), ErrorKind::InvalidParameter,
          "Hausdorff distance needs non-empty sets");
  for (std::size_t a : A)
    require(a < P.n, ErrorKind::InvalidParameter, "point index out of range");
  for (std::size_t b : B)
    require(b < P.n, ErrorKind::InvalidParameter, "point index out of range");

  auto directed = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to,
                      std::size_t& far, std::size_t& near) {
    double sup = -1.0;
    for (std::size_t u : from) {
      double inf = std::numeric_limits<double>::infinity();
      std::size_t arg = to.front();
      for (std::size_t v : to) {
        if (P.at(u, v) < inf) {
          inf = P.at(u, v);
          arg = v;
        }
      }
      if (inf > sup) {
        sup = inf;
        far = u;
        near = arg;
      }
    }
    return sup;
  };

  HausdorffReport rep;
  double ab = directed(A, B, rep.a_far, rep.a_near);
  double ba = directed(B, A, rep.b_far, rep.b_near);
  rep.dist = std::max(ab, ba);
  return rep;
}

BrokenChainReport broken_chain_check(const std::vector<std::size_t>& chain, double C,
                                     double delta, const PointCloud& P) {
  require(chain.size() >= 2, ErrorKind::InvalidParameter, "chain needs at least two points");
  require(C >= 0.0 && delta >= 0.0, ErrorKind::InvalidParameter, "C and delta must be >= 0");
  for (std::size_t i : chain)
    require(i < P.n, ErrorKind::InvalidParameter, "point index out of range");

  BrokenChainReport rep;
  const std::size_t hops = chain.size() - 1;
  rep.gap_required = 2.0 * C + 16.0 * delta;
  rep.min_gap = std::numeric_limits<double>::infinity();
  rep.hypotheses_ok = true;
  for (std::size_t i = 1; i <= hops; ++i) {
    double gap = P.at(chain[i - 1], chain[i]);
    rep.sum_gaps += gap;
    rep.min_gap = std::min(rep.min_gap, gap);
    if (!(gap > rep.gap_required)) {
      rep.hypotheses_ok = false;
      if (rep.hypothesis_note.empty())
        rep.hypothesis_note = "gap " + std::to_string(i) + " is not > 2C + 16 delta";
    }
  }
  for (std::size_t i = 1; i + 1 <= hops; ++i) {
    double g = gromov_product(chain[i - 1], chain[i + 1], chain[i], P);
    rep.max_product = std::max(rep.max_product, g);
    if (g > C + kTol) {
      rep.hypotheses_ok = false;
      if (rep.hypothesis_note.empty())
        rep.hypothesis_note = "Gromov product at interior point " + std::to_string(i) +
                              " exceeds C";
    }
  }
  if (!rep.hypotheses_ok) return rep;

  rep.lhs = P.at(chain.front(), chain.back());
  rep.rhs = rep.sum_gaps - 2.0 * static_cast<double>(hops - 1) * (C + 8.0 * delta);
  rep.margin = rep.lhs - rep.rhs;
  rep.holds = rep.margin >= -kTol;
  return rep;
}

OrbitGraph orbit_graph(const PointCloud& P, double rho) {
  require(rho >= 0.0, ErrorKind::InvalidParameter, "rho must be >= 0");
  OrbitGraph g;
  g.n = P.n;
  g.rho = rho;
  g.threshold = 2.0 * rho + 1.0;

  std::vector<std::vector<std::size_t>> adj(P.n);
  for (std::size_t u = 0; u < P.n; ++u)
    for (std::size_t v = u + 1; v < P.n; ++v)
      if (P.at(u, v) <= g.threshold + kTol) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        g.edges.emplace_back(u, v);
      }

  g.graph_dist.assign(P.n, std::vector<int>(P.n, -1));
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < P.n; ++s) {
    auto& dist = g.graph_dist[s];
    dist[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (std::size_t v : adj[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    for (std::size_t v = 0; v < P.n; ++v)
      if (dist[v] < 0)
        fail(ErrorKind::Disconnected, "orbit graph is disconnected at rho = " +
                                          std::to_string(rho) + ": no path between points " +
                                          std::to_string(s) + " and " + std::to_string(v));
  }

  // Certificate: d(u,v) <= (2rho+1) d_Gamma(u,v) and d_Gamma(u,v) <= ceil(d(u,v)).
  g.cert.C = g.threshold;
  g.cert.direction = "d <= (2rho+1)*d_Gamma and d_Gamma <= ceil(d), all pairs";
  g.cert.holds = true;
  ComparisonCertificate::WitnessPair tight_a, tight_b;
  double slack_a = -std::numeric_limits<double>::infinity();
  double slack_b = -std::numeric_limits<double>::infinity();
  for (std::size_t u = 0; u < P.n; ++u)
    for (std::size_t v = u + 1; v < P.n; ++v) {
      double ds = P.at(u, v);
      double dg = static_cast<double>(g.graph_dist[u][v]);
      double lhs_a = ds, rhs_a = g.threshold * dg;
      double lhs_b = dg, rhs_b = std::ceil(ds - kTol);
      if (lhs_a - rhs_a > slack_a) {
        slack_a = lhs_a - rhs_a;
        tight_a = {u, v, lhs_a, rhs_a};
      }
      if (lhs_b - rhs_b > slack_b) {
        slack_b = lhs_b - rhs_b;
        tight_b = {u, v, lhs_b, rhs_b};
      }
    }
  if (slack_a > kTol || slack_b > kTol) g.cert.holds = false;
  g.cert.witnesses.push_back(slack_a >= slack_b ? tight_a : tight_b);
  g.cert.witnesses.push_back(slack_a >= slack_b ? tight_b : tight_a);
  return g;
}

}  // namespace hyp
