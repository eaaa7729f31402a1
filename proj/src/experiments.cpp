#include "hypstruct/experiments.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "hypstruct/kapovich.hpp"
#include "hypstruct/pseudochar.hpp"
#include "hypstruct/smallcancel.hpp"

namespace hyp {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Tracks which keys an experiment consumed so leftovers can be rejected.
class ConfigView {
 public:
  explicit ConfigView(const Config& c) : c_(c) { used_.insert("experiment"); }

  std::string str(const std::string& key, const std::string& def) {
    used_.insert(key);
    auto it = c_.find(key);
    return it == c_.end() ? def : it->second;
  }

  long i64(const std::string& key, long def) {
    std::string v = str(key, std::to_string(def));
    try {
      std::size_t used = 0;
      long out = std::stol(v, &used);
      require(used == v.size(), ErrorKind::MalformedInput, "bad integer for " + key);
      return out;
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(ErrorKind::MalformedInput, "bad integer for " + key + ": " + v);
    }
  }

  std::uint64_t u64(const std::string& key, std::uint64_t def) {
    long v = i64(key, static_cast<long>(def));
    require(v >= 0, ErrorKind::MalformedInput, key + " must be >= 0");
    return static_cast<std::uint64_t>(v);
  }

  double real(const std::string& key, double def) {
    std::string v = str(key, real_str(def));
    try {
      std::size_t used = 0;
      double out = std::stod(v, &used);
      require(used == v.size(), ErrorKind::MalformedInput, "bad number for " + key);
      return out;
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(ErrorKind::MalformedInput, "bad number for " + key + ": " + v);
    }
  }

  bool flag(const std::string& key, bool def) {
    std::string v = str(key, def ? "true" : "false");
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    fail(ErrorKind::MalformedInput, "bad boolean for " + key + ": " + v);
  }

  mpq_class rational(const std::string& key, const std::string& def) {
    std::string v = str(key, def);
    try {
      mpq_class q(v);
      q.canonicalize();
      return q;
    } catch (const std::exception&) {
      fail(ErrorKind::MalformedInput, "bad rational for " + key + ": " + v);
    }
  }

  void finish() const {
    for (const auto& [key, value] : c_)
      require(used_.count(key) != 0, ErrorKind::MalformedInput, "unknown config key: " + key);
  }

 private:
  const Config& c_;
  std::set<std::string> used_;
};

json dom_json(const DominationVerdict& v) {
  json out;
  out["direction"] = v.direction;
  out["holds"] = v.holds;
  if (v.holds) out["C"] = v.C;
  out["envelope"] = v.envelope;
  out["witness"] = v.witness;
  out["dA"] = v.dA;
  out["dB"] = v.dB;
  return out;
}

json run_family_verify(ConfigView& cfg) {
  long k_min = cfg.i64("k_min", 12), k_max = cfg.i64("k_max", 16);
  long ln = cfg.i64("lambda_num", 3), ld = cfg.i64("lambda_den", 12);
  bool inv_aware = cfg.flag("inverse_aware", false);
  std::uint64_t budget = cfg.u64("budget", kDefaultEnumBudget);
  cfg.finish();
  require(k_min >= 7 && k_max >= k_min, ErrorKind::InvalidParameter,
          "need 7 <= k_min <= k_max");

  json payload;
  payload["params"] = {{"k_min", k_min}, {"k_max", k_max},
                       {"lambda", std::to_string(ln) + "/" + std::to_string(ld)},
                       {"inverse_aware", inv_aware}};
  K0Result k0 = find_k0(static_cast<int>(std::max(k_max, 12L)), budget);
  payload["k0"] = k0.k0;
  payload["f"] = k0.f;

  std::vector<Word> family;
  json rows = json::array();
  for (long k = k_min; k <= k_max; ++k) {
    Word v = build_vk(static_cast<int>(k), budget);
    rows.push_back({{"k", k},
                    {"length", v.size()},
                    {"aperiodic7", is_l_aperiodic(v, 7)}});
    family.push_back(std::move(v));
  }
  payload["family"] = std::move(rows);

  CStarReport rep = verify_cstar(family, ln, ld, inv_aware);
  json cj;
  cj["ok"] = rep.ok;
  cj["lambda"] = std::to_string(rep.lambda_num) + "/" + std::to_string(rep.lambda_den);
  cj["inverse_aware"] = rep.inverse_aware;
  cj["max_common_piece"] = rep.max_common_piece;
  json pieces = json::array();
  for (const CStarPairPiece& p : rep.pair_pieces)
    pieces.push_back({{"i", p.word_i}, {"j", p.word_j}, {"piece_len", p.piece_len}});
  cj["pair_pieces"] = std::move(pieces);
  json viols = json::array();
  for (std::size_t i = 0; i < rep.violations.size() && i < 20; ++i) {
    const CStarViolation& v = rep.violations[i];
    viols.push_back({{"condition", std::string(1, v.condition)},
                     {"word_i", v.word_i},
                     {"word_j", v.word_j},
                     {"shift_i", v.shift_i},
                     {"shift_j", v.shift_j},
                     {"pos_i", v.pos_i},
                     {"pos_j", v.pos_j},
                     {"piece", format_word(v.piece, ab_alphabet())}});
  }
  cj["violations"] = std::move(viols);
  payload["cstar"] = std::move(cj);
  return payload;
}

json run_kapovich_separate(ConfigView& cfg) {
  std::vector<int> S = parse_seed_list(cfg.str("S", "12"));
  std::vector<int> T = parse_seed_list(cfg.str("T", "12,13"));
  long probes = cfg.i64("probes", 2);
  long threshold = cfg.i64("threshold", 2);
  cfg.finish();

  SeparationCertificate cert =
      separation_certificate(S, T, static_cast<int>(probes), static_cast<int>(threshold));
  json payload;
  payload["params"] = {{"S", S}, {"T", T}, {"probes", probes}, {"threshold", threshold}};
  json rows = json::array();
  for (const SeparationProbe& p : cert.probes)
    rows.push_back({{"n", p.n},
                    {"side", p.in_first ? "S\\T" : "T\\S"},
                    {"word_len", p.word.size()},
                    {"dist_S", p.dist_S},
                    {"dist_T", p.dist_T},
                    {"w_word_S", p.w_word_S},
                    {"w_word_T", p.w_word_T},
                    {"piece_bound", p.piece_bound}});
  payload["probes"] = std::move(rows);
  payload["verdict"] = cert.verdict;
  payload["direction"] = cert.direction;
  return payload;
}

json run_bs_compare(ConfigView& cfg) {
  long count = cfg.i64("count", 1000);
  std::uint64_t seed = cfg.u64("seed", 7);
  long word_len = cfg.i64("word_len", 20);
  long fekete_n = cfg.i64("fekete_n", 48);
  long examples = cfg.i64("examples", 5);
  cfg.finish();
  require(count >= 1 && word_len >= 2, ErrorKind::InvalidParameter,
          "need count >= 1 and word_len >= 2");

  TreeModel tree = TreeModel::bs();
  HalfPlaneModel h2 = HalfPlaneModel::bs();
  Rng rng(seed);
  const double ln2 = std::log(2.0);

  bool law_tree_ok = true, fekete_ok = true;
  double law_h2_dev = 0.0;
  json ex = json::array();
  for (long i = 0; i < count; ++i) {
    GroupElement g = random_element(tree, rng, static_cast<int>(word_len));
    const BsElement& b = std::get<BsElement>(g);
    double t_tree = *tree.exact_translation(g);
    double t_h2 = *h2.exact_translation(g);
    if (t_tree != static_cast<double>(std::labs(b.k))) law_tree_ok = false;
    law_h2_dev = std::max(law_h2_dev, std::abs(t_h2 - ln2 * static_cast<double>(std::labs(b.k))));
    TranslationReport ft = translation_number(tree, g, static_cast<int>(fekete_n), true);
    TranslationReport fh = translation_number(h2, g, static_cast<int>(fekete_n), true);
    if (!(ft.lower <= t_tree + 1e-9 && t_tree <= ft.upper + 1e-9)) fekete_ok = false;
    if (!(fh.lower <= t_h2 + 1e-9 && t_h2 <= fh.upper + 1e-9)) fekete_ok = false;
    if (i < examples)
      ex.push_back({{"element", bs_format(b)},
                    {"epsilon", b.k},
                    {"tau_tree", t_tree},
                    {"tau_h2", t_h2},
                    {"fekete_tree", {ft.lower, ft.upper}},
                    {"fekete_h2", {fh.lower, fh.upper}}});
  }

  std::vector<GroupElement> conj, powers;
  for (long j = 0; j <= 12; ++j) {
    conj.emplace_back(bs_mul(bs_mul(bs_b(-j), bs_a(1)), bs_b(j)));
    powers.emplace_back(bs_a(1L << j));
  }
  DominationVerdict no_h2_over_tree = dominates(h2, tree, conj);
  DominationVerdict no_tree_over_h2 = dominates(tree, h2, powers);

  json payload;
  payload["params"] = {{"count", count}, {"seed", seed}, {"word_len", word_len},
                       {"fekete_n", fekete_n}};
  payload["laws"] = {{"tau_tree_eq_abs_epsilon", law_tree_ok},
                     {"tau_h2_law_max_dev", law_h2_dev},
                     {"fekete_brackets_contain_exact", fekete_ok},
                     {"elements_checked", count}};
  payload["examples"] = std::move(ex);
  payload["domination"] = {{"h2_over_tree", dom_json(no_h2_over_tree)},
                           {"tree_over_h2", dom_json(no_tree_over_h2)}};
  return payload;
}

json run_wreath_embed(ConfigView& cfg) {
  long m = cfg.i64("m", 4), n = cfg.i64("n", 2);
  long pairs = cfg.i64("pairs", 500);
  std::uint64_t seed = cfg.u64("seed", 11);
  long j_max = cfg.i64("j_max", 10);
  cfg.finish();

  WreathEmbeddingReport rep = zwreath_embedding_check(m, n, static_cast<int>(pairs), seed,
                                                      static_cast<int>(j_max));
  json payload;
  payload["params"] = {{"m", m}, {"n", n}, {"pairs", pairs}, {"seed", seed}, {"j_max", j_max}};
  json rows = json::array();
  for (const auto& r : rep.pairs)
    rows.push_back({{"u", r.u}, {"v", r.v}, {"dist_m", r.dist_m}, {"dist_n", r.dist_n}});
  payload["pairs"] = std::move(rows);
  payload["lipschitz_ok"] = rep.lipschitz_ok;
  json wit = json::array();
  for (const auto& w : rep.witnesses)
    wit.push_back({{"j", w.j}, {"dist_m", w.dist_m}, {"trivial_in_n", w.trivial_in_n}});
  payload["witnesses"] = std::move(wit);
  payload["witnesses_ok"] = rep.witnesses_ok;
  return payload;
}

json phi_rows(const std::vector<PhiXiCertificate::Row>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back({{"n", r.n}, {"disp_xi", r.disp_xi}, {"disp_eta", r.disp_eta}});
  return out;
}

json run_phi_xi(ConfigView& cfg) {
  double xi = cfg.real("xi", std::sqrt(2.0));
  double eta = cfg.real("eta", std::sqrt(3.0));
  long N = cfg.i64("N", 10000);
  cfg.finish();

  PhiXiCertificate cert = phi_xi_incomparability(xi, eta, static_cast<int>(N));
  json payload;
  payload["params"] = {{"xi", xi}, {"eta", eta}, {"N", N}};
  payload["bound"] = cert.bound;
  payload["bounded_ok"] = cert.bounded_ok;
  payload["dir1"] = {{"rows", phi_rows(cert.dir1)},
                     {"max_disp_xi", cert.max_disp_xi_dir1},
                     {"disp_eta_at_1000", cert.disp_eta_at_1000_dir1},
                     {"disp_eta_at_N", cert.disp_eta_at_N_dir1}};
  payload["dir2"] = {{"rows", phi_rows(cert.dir2)},
                     {"max_disp_eta", cert.max_disp_eta_dir2},
                     {"disp_xi_at_1000", cert.disp_xi_at_1000_dir2},
                     {"disp_xi_at_N", cert.disp_xi_at_N_dir2}};
  return payload;
}

json run_lineal_antichain(ConfigView& cfg) {
  mpq_class lambda = cfg.rational("lambda", "3/10");
  mpq_class mu = cfg.rational("mu", "7/10");
  mpq_class C = cfg.rational("C", "3");
  long i_max = cfg.i64("i_max", 100);
  cfg.finish();

  AntichainCertificate cert = antichain_certificate(lambda, mu, C, static_cast<int>(i_max));
  auto rows_json = [](const std::vector<AntichainCertificate::Row>& rows) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"i", r.i},
                     {"z", r.z},
                     {"p_other", r.p_other},
                     {"len_own", r.len_own},
                     {"lb_other", r.lb_other},
                     {"exact_other", r.exact_other}});
    return out;
  };
  json payload;
  payload["params"] = {{"lambda", cert.lambda}, {"mu", cert.mu}, {"C", cert.C},
                       {"i_max", i_max}};
  payload["x"] = cert.x;
  payload["p_lambda_x"] = cert.p_lambda_x;
  payload["p_mu_x"] = cert.p_mu_x;
  payload["null_lambda"] = rows_json(cert.null_lambda);
  payload["null_mu"] = rows_json(cert.null_mu);
  payload["ok"] = cert.ok;
  payload["verdict"] = cert.verdict;
  return payload;
}

json delta_json(const DeltaEstimate& d) {
  return {{"delta", d.delta},
          {"witness", d.witness},
          {"exhaustive", d.exhaustive},
          {"checked", d.checked},
          {"rips_delta_lower", d.rips_delta_lower}};
}

json run_delta_scan(ConfigView& cfg) {
  std::string source = cfg.str("source", "trees");
  long count = cfg.i64("count", 20);
  long max_vertices = cfg.i64("max_vertices", 50);
  std::uint64_t seed = cfg.u64("seed", 5);
  cfg.finish();
  require(count >= 1, ErrorKind::InvalidParameter, "count must be >= 1");

  json payload;
  payload["params"] = {{"source", source}, {"count", count}, {"max_vertices", max_vertices},
                       {"seed", seed}};
  Rng rng(seed);
  json rows = json::array();

  if (source == "trees") {
    require(max_vertices >= 2, ErrorKind::InvalidParameter, "max_vertices must be >= 2");
    bool all_zero = true;
    for (long c = 0; c < count; ++c) {
      std::size_t n = 2 + rng.below(static_cast<std::uint64_t>(max_vertices - 1));
      // Uniform-attachment tree; graph metric by BFS from every vertex.
      std::vector<std::vector<std::size_t>> adj(n);
      for (std::size_t v = 1; v < n; ++v) {
        std::size_t p = rng.below(v);
        adj[v].push_back(p);
        adj[p].push_back(v);
      }
      std::vector<double> d(n * n, 0.0);
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::vector<std::size_t> queue{s};
        dist[s] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h)
          for (std::size_t w : adj[queue[h]])
            if (dist[w] < 0) {
              dist[w] = dist[queue[h]] + 1;
              queue.push_back(w);
            }
        for (std::size_t t = 0; t < n; ++t) d[s * n + t] = dist[t];
      }
      DeltaEstimate est = four_point_delta(PointCloud::from_matrix(n, std::move(d), true));
      if (est.delta != 0.0) all_zero = false;
      rows.push_back({{"vertices", n}, {"delta", est.delta}, {"checked", est.checked}});
    }
    payload["rows"] = std::move(rows);
    payload["all_zero"] = all_zero;
    return payload;
  }

  std::unique_ptr<ActionModel> model = make_model(source);
  std::vector<GroupElement> elems;
  std::set<std::string> keys;
  elems.push_back(ge_identity_like(model->generators().front()));
  keys.insert(ge_key(elems.back()));
  int misses = 0;
  while (static_cast<long>(elems.size()) < count && misses < 50 * count) {
    GroupElement g = random_element(*model, rng, 8);
    if (keys.insert(ge_key(g)).second)
      elems.push_back(std::move(g));
    else
      ++misses;
  }
  DeltaEstimate est = four_point_delta(action_cloud(*model, elems));
  payload["model"] = model->name();
  payload["n_points"] = elems.size();
  payload["estimate"] = delta_json(est);
  return payload;
}

json run_isospec_bs(ConfigView& cfg) {
  long j_max = cfg.i64("j_max", 8);
  cfg.finish();
  require(j_max >= 3, ErrorKind::InvalidParameter, "j_max must be >= 3");

  TreeModel tree = TreeModel::bs();
  HalfPlaneModel h2 = HalfPlaneModel::bs();
  std::vector<IsospecSequence> seqs(4);
  seqs[0].label = "b^j";
  seqs[1].label = "a^(2^j)";
  seqs[2].label = "b^-j a b^j";
  seqs[3].label = "(ab)^j";
  for (long j = 1; j <= j_max; ++j) {
    seqs[0].elems.emplace_back(bs_b(j));
    seqs[1].elems.emplace_back(bs_a(1L << std::min(j, 30L)));
    seqs[2].elems.emplace_back(bs_mul(bs_mul(bs_b(-j), bs_a(1)), bs_b(j)));
    seqs[3].elems.emplace_back(bs_pow(bs_mul(bs_a(1), bs_b(1)), j));
  }
  IsospecReport rep = coarsely_isospectral(tree, h2, seqs);

  json payload;
  payload["params"] = {{"j_max", j_max}, {"A", tree.name()}, {"B", h2.name()}};
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"label", r.label},
                    {"tauA_lo", r.tauA_lo},
                    {"tauA_hi", r.tauA_hi},
                    {"tauB_lo", r.tauB_lo},
                    {"tauB_hi", r.tauB_hi},
                    {"divergesA", r.divergesA},
                    {"divergesB", r.divergesB},
                    {"agree", r.agree}});
  payload["rows"] = std::move(rows);
  payload["all_agree"] = rep.all_agree;
  payload["bs_law_checked"] = rep.bs_law_checked;
  payload["bs_law_max_dev"] = rep.bs_law_max_dev;
  return payload;
}

}  // namespace

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    require(eq != std::string::npos, ErrorKind::MalformedInput,
            "config line is not key=value: " + t);
    std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
    require(!key.empty(), ErrorKind::MalformedInput, "empty config key");
    require(cfg.emplace(key, value).second, ErrorKind::MalformedInput,
            "duplicate config key: " + key);
  }
  return cfg;
}

std::vector<std::string> experiment_names() {
  return {"family-verify", "kapovich-separate", "bs-compare", "wreath-embed",
          "phi-xi", "lineal-antichain", "delta-scan", "isospec-bs"};
}

json run_experiment(const std::string& name, const Config& cfg) {
  ConfigView view(cfg);
  std::uint64_t seed = 0;
  auto t0 = std::chrono::steady_clock::now();
  json payload;
  if (name == "family-verify") {
    payload = run_family_verify(view);
  } else if (name == "kapovich-separate") {
    payload = run_kapovich_separate(view);
  } else if (name == "bs-compare") {
    seed = view.u64("seed", 7);
    payload = run_bs_compare(view);
  } else if (name == "wreath-embed") {
    seed = view.u64("seed", 11);
    payload = run_wreath_embed(view);
  } else if (name == "phi-xi") {
    payload = run_phi_xi(view);
  } else if (name == "lineal-antichain") {
    payload = run_lineal_antichain(view);
  } else if (name == "delta-scan") {
    seed = view.u64("seed", 5);
    payload = run_delta_scan(view);
  } else if (name == "isospec-bs") {
    payload = run_isospec_bs(view);
  } else {
    fail(ErrorKind::InvalidParameter, "unknown experiment: " + name);
  }
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  json config_echo = json::object();
  for (const auto& [key, value] : cfg) config_echo[key] = value;
  return make_envelope(name, seed, config_echo, payload, ms);
}

std::optional<SeriesPlot> experiment_plot(const json& envelope) {
  const std::string name = envelope.at("experiment").get<std::string>();
  const json& payload = envelope.at("payload");
  SeriesPlot plot;
  if (name == "phi-xi") {
    plot.title = "phi_xi vs phi_eta displacements";
    plot.x_label = "n";
    plot.y_label = "displacement";
    for (const char* dir : {"dir1", "dir2"}) {
      SeriesPlot::Series sx, se;
      sx.label = std::string(dir) + " disp_xi";
      se.label = std::string(dir) + " disp_eta";
      for (const json& row : payload.at(dir).at("rows")) {
        sx.xs.push_back(row.at("n").get<double>());
        sx.ys.push_back(row.at("disp_xi").get<double>());
        se.xs.push_back(row.at("n").get<double>());
        se.ys.push_back(row.at("disp_eta").get<double>());
      }
      plot.series.push_back(std::move(sx));
      plot.series.push_back(std::move(se));
    }
    return plot;
  }
  if (name == "wreath-embed") {
    plot.title = "kernel witnesses t^-j a_0^n t^j";
    plot.x_label = "j";
    plot.y_label = "tree length in T_m";
    SeriesPlot::Series s;
    s.label = "dist_m";
    for (const json& row : payload.at("witnesses")) {
      s.xs.push_back(row.at("j").get<double>());
      s.ys.push_back(row.at("dist_m").get<double>());
    }
    if (s.xs.empty()) return std::nullopt;
    plot.series.push_back(std::move(s));
    return plot;
  }
  if (name == "lineal-antichain") {
    plot.title = "exact word lengths across the antichain";
    plot.x_label = "i";
    plot.y_label = "length";
    for (const char* sidekey : {"null_lambda", "null_mu"}) {
      SeriesPlot::Series s;
      s.label = std::string(sidekey) + " exact_other";
      for (const json& row : payload.at(sidekey)) {
        s.xs.push_back(row.at("i").get<double>());
        s.ys.push_back(row.at("exact_other").get<double>());
      }
      plot.series.push_back(std::move(s));
    }
    return plot;
  }
  return std::nullopt;
}

std::vector<int> parse_seed_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::string t = trim(item);
    require(!t.empty(), ErrorKind::MalformedInput, "empty entry in seed list");
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(t, &used));
      require(used == t.size(), ErrorKind::MalformedInput, "bad seed entry: " + t);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(ErrorKind::MalformedInput, "bad seed entry: " + t);
    }
  }
  require(!out.empty(), ErrorKind::MalformedInput, "seed list is empty");
  return out;
}

std::unique_ptr<ActionModel> make_model(const std::string& name) {
  if (name == "bs-tree") return std::make_unique<TreeModel>(TreeModel::bs());
  if (name == "bs-h2") return std::make_unique<HalfPlaneModel>(HalfPlaneModel::bs());
  if (name.rfind("wreath-tree:", 0) == 0) {
    long mod = std::stol(name.substr(12));
    return std::make_unique<TreeModel>(TreeModel::wreath(mod));
  }
  if (name.rfind("phi:", 0) == 0) {
    double xi = std::stod(name.substr(4));
    return std::make_unique<HalfPlaneModel>(HalfPlaneModel::phi(xi));
  }
  fail(ErrorKind::InvalidParameter,
       "unknown model: " + name + " (try bs-tree, bs-h2, wreath-tree:N, phi:XI)");
}

GroupElement parse_model_element(const std::string& model, const std::string& text) {
  if (model == "bs-tree" || model == "bs-h2") return GroupElement{bs_parse(text)};
  if (model.rfind("wreath-tree:", 0) == 0)
    return GroupElement{w_parse(text, std::stol(model.substr(12)))};
  if (model.rfind("phi:", 0) == 0) return GroupElement{w_parse(text, 0)};
  fail(ErrorKind::InvalidParameter, "unknown model: " + model);
}

}  // namespace hyp
