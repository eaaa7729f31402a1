#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hypstruct/cert.hpp"
#include "hypstruct/experiments.hpp"
#include "hypstruct/kapovich.hpp"
#include "hypstruct/pseudochar.hpp"
#include "hypstruct/smallcancel.hpp"

namespace {

using hyp::json;

struct Output {
  std::string out_path;  // empty = stdout
  std::string svg_path;
};

void emit(const json& envelope, const Output& out) {
  if (!out.svg_path.empty()) {
    std::optional<hyp::SeriesPlot> plot = hyp::experiment_plot(envelope);
    hyp::require(plot.has_value(), hyp::ErrorKind::InvalidParameter,
                 "this command has no plot; drop --svg");
    hyp::write_text_file(out.svg_path, hyp::render_svg(*plot));
  }
  std::string text = hyp::dump_json(envelope);
  if (out.out_path.empty())
    std::cout << text;
  else
    hyp::write_text_file(out.out_path, text);
}

// Wraps a payload builder with timing and the common envelope fields.
template <typename F>
json enveloped(const std::string& experiment, std::uint64_t seed, const json& config, F&& build) {
  auto t0 = std::chrono::steady_clock::now();
  json payload = build();
  auto t1 = std::chrono::steady_clock::now();
  return hyp::make_envelope(experiment, seed, config,
                            payload, std::chrono::duration<double, std::milli>(t1 - t0).count());
}

json word_json(const hyp::Word& w, const hyp::Alphabet& alpha) {
  return {{"word", hyp::format_word(w, alpha)}, {"length", w.size()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypstruct: computable comparisons of hyperbolic structures on groups"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--out", out.out_path, "write the JSON envelope to a file instead of stdout");
  app.add_option("--svg", out.svg_path, "also render a plot of the result to an SVG file");

  // words
  auto* words = app.add_subcommand("words", "small-cancellation word families over {a,b}");
  int vk = 0, xk = 0, ftab = 0, k0max = 0, aper_l = 7;
  std::string aper_word;
  auto* o_vk = words->add_option("--vk", vk, "build v_k and check 7-aperiodicity");
  auto* o_xk = words->add_option("--xk", xk, "list X(k)");
  auto* o_f = words->add_option("--f", ftab, "tabulate f(1..N)");
  auto* o_k0 = words->add_option("--k0", k0max, "find k0 for the range [k0, K]");
  auto* o_ap = words->add_option("--aperiodic", aper_word, "test a word for l-aperiodicity");
  words->add_option("--l", aper_l, "power threshold for --aperiodic (default 7)");

  // kapovich
  auto* kap = app.add_subcommand("kapovich", "the W-word metrics |.|_{Z_S} on F(a,b,c)");
  std::string kap_S = "12", kap_T, kap_word;
  int kap_bfs_L = 0, kap_probes = 2, kap_threshold = 2;
  auto* o_dist = kap->add_option("--dist", kap_word, "compute |w|_{Z_S} with a witness factorization");
  kap->add_option("--S", kap_S, "seed set, e.g. 12,13 (default 12)");
  auto* o_bfs = kap->add_option("--bfs-check", kap_bfs_L,
                                "cross-check --dist against the BFS oracle at radius L");
  auto* o_sep = kap->add_option("--separate", kap_T, "compare against the seed set T");
  kap->add_option("--probes", kap_probes, "probes per side for --separate");
  kap->add_option("--threshold", kap_threshold, "distance ratio counted as separation");

  // delta
  auto* del = app.add_subcommand("delta", "four-point hyperbolicity defect of a distance matrix");
  std::string del_csv;
  bool del_exact = false;
  double del_rho = -1.0;
  std::string del_chain;
  double del_chain_c = 0.0, del_chain_delta = 0.0;
  del->add_option("--csv", del_csv, "square distance matrix, CSV")->required();
  del->add_flag("--exact", del_exact, "entries are exact integers");
  del->add_option("--rho", del_rho, "also build the rho-orbit graph certificate");
  del->add_option("--chain", del_chain, "comma-separated indices for a broken-chain check");
  del->add_option("--chain-c", del_chain_c, "Gromov product bound C for --chain");
  del->add_option("--chain-delta", del_chain_delta, "ambient delta for --chain");

  // action
  auto* act = app.add_subcommand("action", "displacements and translation numbers of a model");
  std::string act_model, act_elem;
  bool act_translation = false, act_fekete = false, act_classify = false;
  int act_ball = -1, act_samples = 12, act_len = 6, act_nmax = 64;
  double act_factorize = -1.0;
  std::uint64_t act_seed = 1;
  act->add_option("--model", act_model, "bs-tree | bs-h2 | wreath-tree:N | phi:XI")->required();
  auto* o_elem = act->add_option("--element", act_elem, "group element, model syntax");
  act->add_flag("--translation", act_translation, "translation number bracket of --element");
  act->add_flag("--fekete", act_fekete, "force the Fekete bracket even when a closed form exists");
  act->add_option("--n-max", act_nmax, "powers used by the Fekete bracket");
  act->add_flag("--classify", act_classify, "sampled evidence for the action type");
  act->add_option("--samples", act_samples, "sample count for --classify");
  act->add_option("--len", act_len, "sample word length for --classify");
  act->add_option("--seed", act_seed, "RNG seed for --classify");
  auto* o_ball = act->add_option("--ball", act_ball, "coset ball of a tree model, by radius");
  auto* o_fac =
      act->add_option("--factorize", act_factorize, "Svarc-Milnor factorization of --element at D");

  // lineal
  auto* lin = app.add_subcommand("lineal", "lineal structures from pseudocharacters on Z^d");
  std::string lin_lambda = "3/10", lin_mu = "7/10", lin_C = "3", lin_coef, lin_g;
  int lin_imax = 100;
  lin->add_option("--lambda", lin_lambda, "first pencil parameter");
  lin->add_option("--mu", lin_mu, "second pencil parameter");
  lin->add_option("--C", lin_C, "generating-set cutoff |p| < C");
  lin->add_option("--i-max", lin_imax, "largest kernel multiple in the antichain table");
  auto* o_coef = lin->add_option("--coef", lin_coef, "form coefficients, e.g. 3/10,7/10");
  auto* o_g = lin->add_option("--g", lin_g, "integer vector, e.g. 700,-300");

  // wreath
  auto* wre = app.add_subcommand("wreath", "Z_m wr Z -> Z_n wr Z coset map checks");
  long wre_m = 4, wre_n = 2;
  int wre_pairs = 500, wre_jmax = 10;
  std::uint64_t wre_seed = 11;
  wre->add_option("--m", wre_m, "source lamp modulus");
  wre->add_option("--n", wre_n, "target lamp modulus (divides m)");
  wre->add_option("--pairs", wre_pairs, "sampled pairs for the Lipschitz check");
  wre->add_option("--seed", wre_seed, "RNG seed");
  wre->add_option("--j-max", wre_jmax, "kernel witnesses t^-j a_0^n t^j for j <= j_max");

  // run
  auto* run = app.add_subcommand("run", "run a named experiment from a config file");
  std::string run_config;
  auto* o_config = run->add_option("--config", run_config, "key=value config with experiment=<name>");
  auto* o_list = run->add_flag("--list", "list experiment names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    json envelope;

    if (words->parsed()) {
      const hyp::Alphabet& ab = hyp::ab_alphabet();
      json cfgj = json::object();
      envelope = enveloped("cli-words", 0, cfgj, [&]() {
        json payload = json::object();
        bool any = false;
        if (*o_vk) {
          any = true;
          hyp::Word v = hyp::build_vk(vk);
          json j = word_json(v, ab);
          j["k"] = vk;
          j["aperiodic7"] = hyp::is_l_aperiodic(v, 7);
          payload["vk"] = std::move(j);
        }
        if (*o_xk) {
          any = true;
          hyp::XkCatalog cat = hyp::enumerate_Xk(xk);
          json list = json::array();
          for (const std::string& s : cat.words)
            list.push_back(hyp::format_word(hyp::from_syms(s), ab));
          payload["xk"] = {{"k", cat.k}, {"count", cat.words.size()}, {"words", std::move(list)}};
        }
        if (*o_f) {
          any = true;
          payload["f"] = hyp::f_table(ftab);
        }
        if (*o_k0) {
          any = true;
          hyp::K0Result r = hyp::find_k0(k0max);
          payload["k0"] = {{"k0", r.k0}, {"k_max", r.k_max}, {"f", r.f}};
        }
        if (*o_ap) {
          any = true;
          hyp::Word w = hyp::parse_word(aper_word, hyp::abc_alphabet());
          auto witness = hyp::find_l_power(w, aper_l);
          json j = {{"word", hyp::format_word(w, hyp::abc_alphabet())},
                    {"l", aper_l},
                    {"aperiodic", !witness.has_value()}};
          if (witness) j["witness"] = {{"start", witness->first}, {"period", witness->second}};
          payload["aperiodic"] = std::move(j);
        }
        hyp::require(any, hyp::ErrorKind::InvalidParameter,
                     "words: pass at least one of --vk --xk --f --k0 --aperiodic");
        return payload;
      });
    } else if (kap->parsed()) {
      if (*o_sep) {
        hyp::Config cfg{{"S", kap_S},
                        {"T", kap_T},
                        {"probes", std::to_string(kap_probes)},
                        {"threshold", std::to_string(kap_threshold)}};
        envelope = hyp::run_experiment("kapovich-separate", cfg);
      } else {
        hyp::require(static_cast<bool>(*o_dist), hyp::ErrorKind::InvalidParameter,
                     "kapovich: pass --dist or --separate");
        json cfgj = {{"S", kap_S}, {"word", kap_word}};
        envelope = enveloped("cli-kapovich-dist", 0, cfgj, [&]() {
          hyp::SeedSet S = hyp::parse_seed_list(kap_S);
          hyp::Word w = hyp::parse_word(kap_word, hyp::abc_alphabet());
          hyp::ZDist zd = hyp::dist_Z(w, S);
          json factors = json::array();
          for (const hyp::Word& f : zd.factors)
            factors.push_back(hyp::format_word(f, hyp::abc_alphabet()));
          json payload = {{"S", S},
                          {"word", hyp::format_word(w, hyp::abc_alphabet())},
                          {"dist", zd.dist},
                          {"factors", std::move(factors)}};
          if (*o_bfs) {
            int oracle = hyp::bfs_oracle_dist(w, S, kap_bfs_L);
            payload["bfs_dist"] = oracle;
            payload["bfs_matches"] = oracle == zd.dist;
          }
          return payload;
        });
      }
    } else if (del->parsed()) {
      json cfgj = {{"csv", del_csv}, {"exact", del_exact}};
      envelope = enveloped("cli-delta", 0, cfgj, [&]() {
        hyp::PointCloud P = hyp::read_csv_matrix(hyp::read_text_file(del_csv), del_exact);
        hyp::DeltaEstimate est = hyp::four_point_delta(P);
        json payload;
        payload["n"] = P.n;
        payload["delta"] = {{"delta", est.delta},
                            {"witness", est.witness},
                            {"exhaustive", est.exhaustive},
                            {"checked", est.checked},
                            {"seed", est.seed},
                            {"rips_delta_lower", est.rips_delta_lower}};
        if (del_rho >= 0.0) {
          hyp::OrbitGraph g = hyp::orbit_graph(P, del_rho);
          json wit = json::array();
          for (std::size_t i = 0; i < g.cert.witnesses.size() && i < 4; ++i)
            wit.push_back({{"u", g.cert.witnesses[i].u},
                           {"v", g.cert.witnesses[i].v},
                           {"lhs", g.cert.witnesses[i].lhs},
                           {"rhs", g.cert.witnesses[i].rhs}});
          payload["orbit_graph"] = {{"rho", g.rho},
                                    {"threshold", g.threshold},
                                    {"edges", g.edges.size()},
                                    {"holds", g.cert.holds},
                                    {"direction", g.cert.direction},
                                    {"witnesses", std::move(wit)}};
        }
        if (!del_chain.empty()) {
          std::vector<int> raw = hyp::parse_seed_list(del_chain);
          std::vector<std::size_t> chain;
          for (int i : raw) {
            hyp::require(i >= 0, hyp::ErrorKind::InvalidParameter, "chain indices must be >= 0");
            chain.push_back(static_cast<std::size_t>(i));
          }
          hyp::BrokenChainReport r =
              hyp::broken_chain_check(chain, del_chain_c, del_chain_delta, P);
          payload["chain"] = {{"hypotheses_ok", r.hypotheses_ok},
                              {"note", r.hypothesis_note},
                              {"max_product", r.max_product},
                              {"min_gap", r.min_gap},
                              {"gap_required", r.gap_required},
                              {"holds", r.holds},
                              {"lhs", r.lhs},
                              {"rhs", r.rhs},
                              {"margin", r.margin}};
        }
        return payload;
      });
    } else if (act->parsed()) {
      json cfgj = {{"model", act_model}};
      if (*o_elem) cfgj["element"] = act_elem;
      envelope = enveloped("cli-action", act_seed, cfgj, [&]() {
        std::unique_ptr<hyp::ActionModel> model = hyp::make_model(act_model);
        json payload;
        payload["model"] = model->name();
        if (*o_elem) {
          hyp::GroupElement g = hyp::parse_model_element(act_model, act_elem);
          payload["element"] = hyp::ge_to_string(g);
          payload["displacement"] = model->displacement(g);
          if (act_translation || act_fekete) {
            hyp::TranslationReport t =
                hyp::translation_number(*model, g, act_nmax, act_fekete);
            payload["translation"] = {{"lower", t.lower},
                                      {"upper", t.upper},
                                      {"method", t.method},
                                      {"detail", t.detail},
                                      {"n_max", t.n_max}};
          }
          if (*o_fac) {
            auto* tree = dynamic_cast<hyp::TreeModel*>(model.get());
            hyp::require(tree != nullptr, hyp::ErrorKind::UnsupportedModel,
                         "--factorize needs a tree model");
            std::vector<hyp::GroupElement> fs = hyp::svarc_factorize(*tree, g, act_factorize);
            json list = json::array();
            for (const hyp::GroupElement& f : fs) list.push_back(hyp::ge_to_string(f));
            payload["factorization"] = {{"D", act_factorize},
                                        {"count", fs.size()},
                                        {"factors", std::move(list)}};
          }
        } else {
          hyp::require(!act_translation && !*o_fac, hyp::ErrorKind::InvalidParameter,
                       "--translation/--factorize need --element");
        }
        if (act_classify) {
          hyp::ActionTypeEvidence ev =
              hyp::classify_action(*model, act_samples, act_len, act_seed);
          json lox = json::array();
          for (const auto& [el, tau] : ev.loxodromics)
            lox.push_back({{"element", el}, {"tau_lower", tau}});
          payload["classify"] = {{"claimed", ev.claimed},
                                 {"orbit_bounded", ev.orbit_bounded},
                                 {"orbit_radius", ev.orbit_radius},
                                 {"loxodromics", std::move(lox)},
                                 {"pairs_checked", ev.pairs.size()},
                                 {"notes", ev.notes}};
        }
        if (*o_ball) {
          auto* tree = dynamic_cast<hyp::TreeModel*>(model.get());
          hyp::require(tree != nullptr, hyp::ErrorKind::UnsupportedModel,
                       "--ball needs a tree model");
          hyp::TreeBall ball = hyp::tree_ball(*tree, act_ball);
          std::vector<std::size_t> per_depth(static_cast<std::size_t>(act_ball) + 1, 0);
          for (int d : ball.bfs_dist) ++per_depth[static_cast<std::size_t>(d)];
          payload["ball"] = {{"radius", act_ball},
                             {"vertices", ball.keys.size()},
                             {"per_depth", per_depth}};
        }
        return payload;
      });
    } else if (lin->parsed()) {
      if (*o_coef || *o_g) {
        hyp::require(static_cast<bool>(*o_coef) && static_cast<bool>(*o_g),
                     hyp::ErrorKind::InvalidParameter, "--coef and --g go together");
        json cfgj = {{"coef", lin_coef}, {"C", lin_C}, {"g", lin_g}};
        envelope = enveloped("cli-lineal-length", 0, cfgj, [&]() {
          std::vector<mpq_class> coef;
          {
            std::istringstream in(lin_coef);
            std::string item;
            while (std::getline(in, item, ',')) {
              mpq_class q(item);
              q.canonicalize();
              coef.push_back(q);
            }
          }
          std::vector<long> g;
          for (int x : hyp::parse_seed_list(lin_g)) g.push_back(x);
          mpq_class C(lin_C);
          C.canonicalize();
          mpq_class p = 0;
          for (std::size_t i = 0; i < coef.size() && i < g.size(); ++i) p += coef[i] * g[i];
          long len = hyp::zd_exact_length(coef, C, g);
          json payload = {{"coef", lin_coef},
                          {"C", C.get_str()},
                          {"g", lin_g},
                          {"p_value", p.get_str()},
                          {"exact_length", len}};
          return payload;
        });
      } else {
        hyp::Config cfg{{"lambda", lin_lambda},
                        {"mu", lin_mu},
                        {"C", lin_C},
                        {"i_max", std::to_string(lin_imax)}};
        envelope = hyp::run_experiment("lineal-antichain", cfg);
      }
    } else if (wre->parsed()) {
      hyp::Config cfg{{"m", std::to_string(wre_m)},
                      {"n", std::to_string(wre_n)},
                      {"pairs", std::to_string(wre_pairs)},
                      {"seed", std::to_string(wre_seed)},
                      {"j_max", std::to_string(wre_jmax)}};
      envelope = hyp::run_experiment("wreath-embed", cfg);
    } else if (run->parsed()) {
      if (*o_list) {
        json payload = {{"experiments", hyp::experiment_names()}};
        envelope = hyp::make_envelope("cli-list", 0, json::object(), payload, 0.0);
      } else {
        hyp::require(static_cast<bool>(*o_config), hyp::ErrorKind::InvalidParameter,
                     "run: pass --config FILE or --list");
        hyp::Config cfg = hyp::parse_config(hyp::read_text_file(run_config));
        auto it = cfg.find("experiment");
        hyp::require(it != cfg.end(), hyp::ErrorKind::MalformedInput,
                     "config must set experiment=<name>");
        envelope = hyp::run_experiment(it->second, cfg);
      }
    }

    std::vector<std::string> issues = hyp::schema_validate(hyp::envelope_schema(), envelope);
    hyp::require(issues.empty(), hyp::ErrorKind::Internal,
                 "envelope failed schema validation: " + (issues.empty() ? "" : issues[0]));
    emit(envelope, out);
    return 0;
  } catch (const hyp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
