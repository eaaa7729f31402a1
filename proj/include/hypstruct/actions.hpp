#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypstruct/groups.hpp"
#include "hypstruct/metric.hpp"
#include "hypstruct/rng.hpp"

namespace hyp {

// Hyperbolic metric on the upper half-plane, d(z,w) = arccosh(1 + |z-w|^2 / (2 Im z Im w)),
// evaluated in a log1p-stable form.
double h2_dist(std::complex<double> z, std::complex<double> w);
std::complex<double> moebius_apply(const std::array<double, 4>& M, std::complex<double> z);

// An action G on S with basepoint s, reduced to what the experiments need:
// exact displacements d(s, gs) and (where the model permits) exact
// translation numbers.
class ActionModel {
 public:
  virtual ~ActionModel() = default;
  virtual std::string name() const = 0;
  virtual double displacement(const GroupElement& g) const = 0;  // d(s, gs)
  virtual bool integer_metric() const { return false; }
  // Declared constant for the four-point inequality of the ambient space
  // (8 * a known Rips delta). Negative = unknown; the Fekete lower bound then
  // falls back to a measured, evidence-grade value.
  virtual double fourpoint_constant() const { return -1.0; }
  virtual std::optional<double> exact_translation(const GroupElement& g) const {
    (void)g;
    return std::nullopt;
  }
  virtual std::vector<GroupElement> generators() const = 0;

  double dist(const GroupElement& g, const GroupElement& h) const;  // d(gs, hs)
};

// BS(1,2) or Z wr Z acting on the upper half-plane through 2x2 matrices
// (bs_matrix, or phi_xi for a chosen xi). Basepoint i.
class HalfPlaneModel : public ActionModel {
 public:
  static HalfPlaneModel bs();
  static HalfPlaneModel phi(double xi);

  std::string name() const override;
  double displacement(const GroupElement& g) const override;
  double fourpoint_constant() const override { return 8.0; }  // 8 * ln(1 + sqrt 2) < 8
  std::optional<double> exact_translation(const GroupElement& g) const override;
  std::vector<GroupElement> generators() const override;

  std::array<double, 4> matrix(const GroupElement& g) const;
  std::complex<double> apply(const GroupElement& g, std::complex<double> z) const;

 private:
  bool phi_rep_ = false;
  double xi_ = 0.0;
};

// Bass-Serre tree of BS(1,2) (3-regular) or of Z_n wr Z ((n+1)-regular;
// n = 0 gives Z wr Z, whose tree is not locally finite but still has exact
// distances). Basepoint = the coset B of the base group.
class TreeModel : public ActionModel {
 public:
  static TreeModel bs();
  static TreeModel wreath(long mod);

  std::string name() const override;
  double displacement(const GroupElement& g) const override;
  bool integer_metric() const override { return true; }
  double fourpoint_constant() const override { return 0.0; }
  std::optional<double> exact_translation(const GroupElement& g) const override;
  std::vector<GroupElement> generators() const override;

  long tree_length(const GroupElement& g) const;  // p + q of the Britton form
  std::string coset_key(const GroupElement& g) const;
  // Right-multiplication moves generating all tree neighbours of a coset gB:
  // the parent move t^-1 and one move per child. Requires local finiteness
  // (BS, or wreath with mod >= 2).
  std::vector<GroupElement> neighbor_moves() const;
  bool is_wreath() const { return kind_ == Kind::Wreath; }
  long lamp_mod() const { return mod_; }

 private:
  enum class Kind { BS, Wreath };
  Kind kind_ = Kind::BS;
  long mod_ = 0;
};

// Word metric on an explicitly generated group, displacements by BFS over
// the ball around the identity.
class CayleyModel : public ActionModel {
 public:
  CayleyModel(std::string name, std::vector<GroupElement> gens,
              std::uint64_t ball_budget = 1ull << 20);

  std::string name() const override;
  double displacement(const GroupElement& g) const override;
  bool integer_metric() const override { return true; }
  std::vector<GroupElement> generators() const override;

 private:
  std::string name_;
  std::vector<GroupElement> gens_;  // closed under inversion
  std::uint64_t budget_;
  // BFS ball around the identity, grown on demand and kept across calls so
  // repeated displacement queries share one enumeration.
  mutable std::vector<GroupElement> ball_;
  mutable std::vector<int> depth_;
  mutable std::unordered_map<std::string, int> seen_;
  mutable std::size_t head_ = 0;
};

// Random word of length <= len in the model's generators and their inverses.
GroupElement random_element(const ActionModel& A, Rng& rng, int len);

struct TranslationReport {
  std::string element;
  double lower = 0.0, upper = 0.0;
  std::string method;  // "exact-closed-form" | "fekete-bracket"
  std::string detail;
  int n_max = 0;
};

TranslationReport translation_number(const ActionModel& A, const GroupElement& g, int n_max = 64,
                                     bool force_fekete = false);

struct EndPairEvidence {
  std::string g, h;
  int g_dir = 1, h_dir = 1;  // +1 = forward tail, -1 = backward tail
  double radius = 0.0;
  double h_at_R = 0.0, h_at_2R = 0.0;
  bool shared = false;
};

struct ActionTypeEvidence {
  std::string claimed;  // "<type>-evidence" or "undetermined"
  bool orbit_bounded = false;
  double orbit_radius = 0.0;
  std::vector<std::pair<std::string, double>> loxodromics;  // element, tau lower bound
  std::vector<EndPairEvidence> pairs;
  std::string notes;
};

ActionTypeEvidence classify_action(const ActionModel& A, int samples = 40, int word_len = 10,
                                   std::uint64_t seed = 1);

struct DominationVerdict {
  std::string direction;        // "B-displacements <= C (1 + A-displacements) on probes"
  bool holds = false;           // holds-on-probes
  double C = 0.0;               // fitted constant when holds
  double envelope = 0.0;        // refutation envelope 10 (1 + max A-displacement)
  std::vector<std::size_t> witness;  // indices of a divergent refuting subsequence
  std::vector<double> dA, dB;
};

// Tests whether A dominates B on the probe list: d_B(s, gs) <= C d_A(r, gr) + C.
DominationVerdict dominates(const ActionModel& A, const ActionModel& B,
                            const std::vector<GroupElement>& probes);

struct IsospecSequence {
  std::string label;
  std::vector<GroupElement> elems;
};

struct IsospecReport {
  struct Row {
    std::string label;
    std::vector<double> tauA_lo, tauA_hi, tauB_lo, tauB_hi;
    bool divergesA = false, divergesB = false, agree = false;
  };
  std::vector<Row> rows;
  bool all_agree = true;
  bool bs_law_checked = false;  // tau_h2 = ln 2 * tau_tree on the BS pair
  double bs_law_max_dev = 0.0;
};

IsospecReport coarsely_isospectral(const ActionModel& A, const ActionModel& B,
                                   const std::vector<IsospecSequence>& sequences);

// Exhaustive coset ball of a locally finite Bass-Serre tree.
struct TreeBall {
  std::vector<std::string> keys;
  std::vector<int> bfs_dist;
  std::vector<GroupElement> reps;
};

TreeBall tree_ball(const TreeModel& T, int radius, std::uint64_t state_budget = 1ull << 20);

// Svarc-Milnor generating set X = {g : d(s, gs) <= 2D+1} on a tree model.
bool svarc_membership(const ActionModel& A, const GroupElement& g, double D);
std::vector<GroupElement> svarc_factorize(const TreeModel& T, const GroupElement& g, double D);

struct WreathEmbeddingReport {
  long m = 0, n = 0;
  struct PairRow {
    std::string u, v;
    long dist_m = 0, dist_n = 0;
  };
  std::vector<PairRow> pairs;
  bool lipschitz_ok = true;
  struct WitnessRow {
    long j = 0;
    long dist_m = 0;       // expected 2j
    bool trivial_in_n = false;
  };
  std::vector<WitnessRow> witnesses;
  bool witnesses_ok = true;
  std::uint64_t seed = 0;
};

// Prop.-style check for the T_m -> T_n coset map induced by mod-n reduction:
// 1-Lipschitz on sampled pairs, with kernel elements t^-j a_0^n t^j moving
// the T_m basepoint by exactly 2j while dying in the quotient.
WreathEmbeddingReport zwreath_embedding_check(long m, long n, int pair_count, std::uint64_t seed,
                                              int j_max = 10);

struct PhiXiCertificate {
  double xi = 0.0, eta = 0.0;
  int N = 0;
  double bound = 0.0;  // arccosh(9/8)
  struct Row {
    long n = 0;
    double disp_xi = 0.0, disp_eta = 0.0;
  };
  // Direction 1: g_n = a_1^n a_0^{-round(n xi)} stays bounded under phi_xi,
  // diverges under phi_eta. Direction 2 swaps the roles.
  std::vector<Row> dir1, dir2;  // thinned tables
  double max_disp_xi_dir1 = 0.0, disp_eta_at_1000_dir1 = 0.0, disp_eta_at_N_dir1 = 0.0;
  double max_disp_eta_dir2 = 0.0, disp_xi_at_1000_dir2 = 0.0, disp_xi_at_N_dir2 = 0.0;
  bool bounded_ok = true;  // every bounded-side displacement <= bound + 1e-9
};

PhiXiCertificate phi_xi_incomparability(double xi, double eta, int N);

// Distance matrix of an orbit sample {g s : g in elems} under the model.
PointCloud action_cloud(const ActionModel& A, const std::vector<GroupElement>& elems);

}  // namespace hyp
