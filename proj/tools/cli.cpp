#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "hypersquare/absorber.hpp"
#include "hypersquare/auxgraphs.hpp"
#include "hypersquare/connector.hpp"
#include "hypersquare/errors.hpp"
#include "hypersquare/generators.hpp"
#include "hypersquare/oracle.hpp"
#include "hypersquare/pipeline.hpp"
#include "hypersquare/text_io.hpp"
#include "hypersquare/tiling.hpp"

namespace hypersquare::cli {

namespace {

using nlohmann::json;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

json config_json(const Config& c) {
  return {{"alpha", c.alpha}, {"beta", c.beta},   {"gamma", c.gamma}, {"theta_star", c.theta_star},
          {"cap_m", c.cap_m}, {"q", c.q},         {"tau", c.tau},     {"mu", c.mu},
          {"seed", c.seed}};
}

// Accepts "a,b,c" as well as "a b c".
std::vector<int> parse_ids(std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  return parse_sequence(text).vertices;
}

Triple parse_triple(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  const VertexSeq s = parse_sequence(spaced);
  if (s.closed || s.size() != 3) throw ArgumentError("expected three vertex ids, got \"" + text + "\"");
  return {s.vertices[0], s.vertices[1], s.vertices[2]};
}

// Options shared by several subcommands.
struct Shared {
  std::string input;
  bool json = false;
  std::uint64_t seed = 1;
  const CLI::Option* seed_opt = nullptr;  ///< --seed of the subcommand that ran
  Config cfg;
  bool seed_explicit = false;  ///< from --seed or the environment
};

void add_io(CLI::App* sub, Shared& s) {
  sub->add_option("--input,-i", s.input, "hypergraph file (default: standard input)");
  sub->add_flag("--json", s.json, "machine-readable JSON output");
}

void add_seed(CLI::App* sub, Shared& s) {
  sub->add_option("--seed", s.seed, "master seed (falls back to HYPERSQUARE_SEED)");
}

void add_config(CLI::App* sub, Shared& s) {
  sub->add_option("--alpha", s.cfg.alpha)->capture_default_str();
  sub->add_option("--beta", s.cfg.beta)->capture_default_str();
  sub->add_option("--gamma", s.cfg.gamma)->capture_default_str();
  sub->add_option("--theta-star", s.cfg.theta_star)->capture_default_str();
  sub->add_option("--cap-m", s.cfg.cap_m)->capture_default_str();
  sub->add_option("--q", s.cfg.q, "vertices per cover path")->capture_default_str();
  sub->add_option("--tau", s.cfg.tau)->capture_default_str();
  sub->add_option("--mu", s.cfg.mu)->capture_default_str();
}

class Session {
 public:
  Session(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
          Shared& shared)
      : args_(args), in_(in), out_(out), err_(err), s_(shared) {}

  void resolve_seed() {
    if (s_.seed_opt && s_.seed_opt->count() > 0) {
      s_.cfg.seed = s_.seed;
      s_.seed_explicit = true;
      return;
    }
    if (const char* env = std::getenv("HYPERSQUARE_SEED"); env && *env) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (*end != '\0') throw ArgumentError("HYPERSQUARE_SEED is not an unsigned integer");
      s_.cfg.seed = v;
      s_.seed_explicit = true;
    } else {
      s_.cfg.seed = 1;
    }
  }

  Hypergraph3 load() {
    std::string data;
    if (s_.input.empty()) {
      std::ostringstream buf;
      buf << in_.rdbuf();
      data = buf.str();
    } else {
      std::ifstream f(s_.input, std::ios::binary);
      if (!f) throw ArgumentError("cannot open " + s_.input);
      std::ostringstream buf;
      buf << f.rdbuf();
      data = buf.str();
    }
    digest_ = sha256_hex(data);
    std::istringstream is(data);
    return read_hypergraph(is);
  }

  json manifest(const std::string& command) const {
    json m;
    m["command"] = command;
    m["argv"] = args_;
    m["config"] = config_json(s_.cfg);
    m["seed"] = s_.cfg.seed;
    m["version"] = kVersion;
    m["input_sha256"] = digest_ ? json(*digest_) : json(nullptr);
    return m;
  }

  /// Text mode: manifest comment then body. JSON mode: body object with
  /// the manifest attached.
  void emit(const std::string& command, bool randomized, const std::string& text, json body) {
    if (s_.json) {
      if (randomized) body["manifest"] = manifest(command);
      out_ << body.dump(2) << '\n';
    } else {
      if (randomized) out_ << "# manifest " << manifest(command).dump() << '\n';
      out_ << text;
    }
  }

  const std::vector<std::string>& args_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  Shared& s_;
  std::optional<std::string> digest_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Squared Hamiltonian cycles in 3-uniform hypergraphs", "hypersquare"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Shared sh;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a hypergraph");
  std::string gen_kind;
  int gen_n = 0;
  double gen_p = 0.5, gen_target = 0.8;
  gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"complete", "pikhurko", "random", "dense"}));
  gen->add_option("n", gen_n)->required();
  gen->add_option("--p", gen_p, "triple probability (random)")->capture_default_str();
  gen->add_option("--target", gen_target, "pair-degree fraction (dense)")->capture_default_str();
  gen->add_flag("--json", sh.json);
  add_seed(gen, sh);

  // check
  auto* check = app.add_subcommand("check", "certify a vertex sequence");
  std::string check_kind, check_seq;
  int check_vertex = -1;
  check->add_option("kind", check_kind)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "walk", "hamiltonian", "absorber"}));
  check->add_option("sequence", check_seq, "ids separated by spaces, \"C ...\" when closed")->required();
  check->add_option("--vertex", check_vertex, "absorbed vertex (absorber)");
  add_io(check, sh);

  // aux
  auto* aux = app.add_subcommand("aux", "auxiliary graphs");
  std::string aux_kind, aux_graph = "g3";
  int aux_v = 0, aux_w = 1, aux_source = 0, aux_length = 2, aux_effort = 64;
  aux->add_option("kind", aux_kind)->required()->check(CLI::IsMember({"g3", "gv", "gvw", "walks", "expansion"}));
  aux->add_option("--graph", aux_graph, "graph for walks/expansion")
      ->check(CLI::IsMember({"g3", "gv", "gvw"}))
      ->capture_default_str();
  aux->add_option("--v", aux_v)->capture_default_str();
  aux->add_option("--w", aux_w)->capture_default_str();
  aux->add_option("--source", aux_source)->capture_default_str();
  aux->add_option("--length", aux_length)->capture_default_str();
  aux->add_option("--effort", aux_effort, "restarts of the heuristic expansion search")->capture_default_str();
  aux->add_option("--beta", sh.cfg.beta)->capture_default_str();
  aux->add_option("--gamma", sh.cfg.gamma)->capture_default_str();
  add_io(aux, sh);
  add_seed(aux, sh);

  // connect
  auto* con = app.add_subcommand("connect", "shortest squared path between two edges");
  std::string con_from, con_to, con_forbid;
  std::int64_t con_budget = kDefaultConnectBudget;
  con->add_option("--from", con_from, "start edge \"a b c\"")->required();
  con->add_option("--to", con_to, "end edge \"x y z\"")->required();
  con->add_option("--forbid", con_forbid, "vertices the interior must avoid");
  con->add_option("--cap-m", sh.cfg.cap_m)->capture_default_str();
  con->add_option("--budget", con_budget, "states kept per depth")->capture_default_str();
  add_io(con, sh);

  // tile
  auto* tile = app.add_subcommand("tile", "weighted {K2,K3,K4}-tiling");
  std::optional<int> tile_threshold;
  bool tile_factor = false;
  tile->add_option("--threshold", tile_threshold, "good-pair degree (default ceil((3/4+alpha) n))");
  tile->add_flag("--factor", tile_factor, "prune bad vertices and report the almost-K4 factor");
  add_io(tile, sh);
  add_seed(tile, sh);
  add_config(tile, sh);

  // cover
  auto* cover = app.add_subcommand("cover", "cover with squared paths of q vertices");
  add_io(cover, sh);
  add_seed(cover, sh);
  add_config(cover, sh);

  // absorb
  auto* absorb_cmd = app.add_subcommand("absorb", "absorbing path demonstration");
  bool absorb_demo = false;
  absorb_cmd->add_flag("--demo", absorb_demo, "build a family and path, then absorb vertices into it");
  add_io(absorb_cmd, sh);
  add_seed(absorb_cmd, sh);
  add_config(absorb_cmd, sh);

  // construct
  auto* cons = app.add_subcommand("construct", "build a squared Hamiltonian cycle");
  bool cons_timings = false;
  cons->add_flag("--timings", cons_timings, "include stage timings (not reproducible)");
  add_io(cons, sh);
  add_seed(cons, sh);
  add_config(cons, sh);

  // oracle
  auto* orc = app.add_subcommand("oracle", "exact search");
  std::string orc_kind;
  std::int64_t orc_limit_ms = 60'000;
  orc->add_option("kind", orc_kind)->required()->check(CLI::IsMember({"cycle", "tiling"}));
  orc->add_option("--time-limit", orc_limit_ms, "milliseconds")->capture_default_str();
  add_io(orc, sh);

  // probe
  auto* probe = app.add_subcommand("probe", "oracle vs pipeline across pair-degree fractions");
  ProbeOptions popt;
  std::string probe_mode = "both";
  std::int64_t probe_limit_ms = 10'000;
  probe->add_option("--n", popt.n)->capture_default_str();
  probe->add_option("--grid", popt.grid, "comma-separated fractions")->delimiter(',')->required();
  probe->add_option("--trials", popt.trials)->capture_default_str();
  probe->add_option("--time-limit", probe_limit_ms, "oracle milliseconds per instance")->capture_default_str();
  probe->add_option("--mode", probe_mode)->check(CLI::IsMember({"exact", "pipeline", "both"}))->capture_default_str();
  probe->add_option("--jobs", popt.jobs)->capture_default_str();
  probe->add_flag("--json", sh.json);
  add_seed(probe, sh);
  add_config(probe, sh);

  std::vector<const char*> argv{"hypersquare"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  for (const CLI::App* sub : app.get_subcommands())
    if (const CLI::Option* o = sub->get_option_no_throw("--seed")) sh.seed_opt = o;
  Session ses(args, in, out, err, sh);
  try {
    ses.resolve_seed();
    sh.cfg.validate();

    if (gen->parsed()) {
      std::optional<Hypergraph3> h;
      bool randomized = false;
      if (gen_kind == "complete") {
        h = complete(gen_n);
      } else if (gen_kind == "pikhurko") {
        h = pikhurko(gen_n).hypergraph;
      } else if (!sh.seed_explicit) {
        throw ArgumentError("randomized generators need --seed or HYPERSQUARE_SEED");
      } else if (gen_kind == "random") {
        h = random_hypergraph(gen_n, gen_p, sh.cfg.seed);
        randomized = true;
      } else {
        h = dense_random(gen_n, gen_target, sh.cfg.seed);
        randomized = true;
      }
      std::ostringstream text;
      write_hypergraph(text, *h);
      ses.emit("gen", randomized, text.str(), {{"n", h->n()}, {"edges", h->edges()}});
      return kOk;
    }

    if (check->parsed()) {
      const Hypergraph3 h = ses.load();
      const VertexSeq seq = parse_sequence(check_seq);
      for (int v : seq.vertices)
        if (v >= h.n()) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
      bool ok = false;
      if (check_kind == "path") {
        ok = is_squared_path(h, seq);
      } else if (check_kind == "cycle") {
        ok = is_squared_cycle(h, seq);
      } else if (check_kind == "walk") {
        ok = is_squared_walk(h, seq);
      } else if (check_kind == "hamiltonian") {
        ok = certify_hamiltonian(h, seq);
      } else {
        if (seq.size() != 6 || seq.closed) throw ArgumentError("absorber check needs six ids");
        if (check_vertex < 0 || check_vertex >= h.n()) throw ArgumentError("absorber check needs --vertex in range");
        SixTuple t;
        std::copy(seq.vertices.begin(), seq.vertices.end(), t.begin());
        ok = is_v_absorber(h, check_vertex, t);
      }
      ses.emit("check", false, ok ? "accepted\n" : "rejected\n", {{"kind", check_kind}, {"accepted", ok}});
      return ok ? kOk : kOutcome;
    }

    if (aux->parsed()) {
      const Hypergraph3 h = ses.load();
      const std::string which = (aux_kind == "walks" || aux_kind == "expansion") ? aux_graph : aux_kind;
      AuxGraph g;
      if (which == "g3") g = build_g3(h, sh.cfg.beta);
      else if (which == "gv") g = build_gv(h, aux_v, sh.cfg.beta);
      else g = build_gvw(h, aux_v, aux_w);

      std::ostringstream text;
      json body{{"graph", which}};
      if (aux_kind == "walks") {
        const WalkCountTable t = walk_counts(g, aux_source, aux_length);
        json counts = json::object();
        text << "vertex,walks\n";
        g.vertices().for_each([&](int u) {
          text << u << ',' << t.counts[static_cast<std::size_t>(u)] << '\n';
          counts[std::to_string(u)] = t.counts[static_cast<std::size_t>(u)];
        });
        body["source"] = aux_source;
        body["length"] = aux_length;
        body["counts"] = counts;
        ses.emit("aux", false, text.str(), body);
        return kOk;
      }
      if (aux_kind == "expansion") {
        const ExpansionReport r = expansion_report(g, sh.cfg.gamma, aux_effort, sh.cfg.seed);
        text << "exhaustive " << (r.exhaustive ? "yes" : "no") << '\n'
             << "violation " << (r.violation ? "yes" : "no") << '\n'
             << "min_side " << r.min_side << '\n'
             << "required_crossing " << r.required_crossing << '\n'
             << "best_crossing " << r.best_crossing << '\n'
             << "min_degree " << r.min_degree << '\n'
             << "degree_ok " << (r.degree_ok ? "yes" : "no") << '\n';
        body.update({{"exhaustive", r.exhaustive},
                     {"violation", r.violation},
                     {"min_side", r.min_side},
                     {"required_crossing", r.required_crossing},
                     {"best_crossing", r.best_crossing},
                     {"side_x", r.side_x},
                     {"min_degree", r.min_degree},
                     {"degree_ok", r.degree_ok}});
        ses.emit("aux", !r.exhaustive, text.str(), body);
        return kOk;
      }
      text << "order " << g.order() << '\n' << "min_degree " << g.min_degree() << '\n';
      for (auto [u, v] : g.edges()) text << u << ' ' << v << '\n';
      body.update({{"vertices", g.vertices().to_vector()}, {"min_degree", g.min_degree()}, {"edges", g.edges()}});
      ses.emit("aux", false, text.str(), body);
      return kOk;
    }

    if (con->parsed()) {
      const Hypergraph3 h = ses.load();
      VertexSet forbidden(h.n());
      if (!con_forbid.empty())
        for (int v : parse_ids(con_forbid)) {
          if (v >= h.n()) throw ArgumentError("forbidden vertex out of range");
          forbidden.insert(v);
        }
      if (sh.cfg.cap_m < 1) throw ArgumentError("cap-m must be >= 1");
      const auto p = connect(h, parse_triple(con_from), parse_triple(con_to), forbidden, sh.cfg.cap_m, con_budget);
      if (!p) {
        ses.emit("connect", false, "NONE\n", {{"found", false}});
        return kOutcome;
      }
      ses.emit("connect", false, format_sequence(*p) + "\n",
               {{"found", true}, {"path", p->vertices}, {"interior", static_cast<int>(p->size()) - 6}});
      return kOk;
    }

    if (tile->parsed()) {
      const Hypergraph3 h = ses.load();
      std::ostringstream text;
      json body;
      auto tiles_json = [](const Tiling& t) {
        json arr = json::array();
        for (const auto& tl : t.tiles) arr.push_back(tl);
        return arr;
      };
      if (tile_factor) {
        const AlmostFactor f = almost_k4_factor(h, sh.cfg);
        text << "threshold " << f.threshold << '\n'
             << "k4 " << f.k4s.size() << '\n'
             << "leftover " << f.leftover.size() << '\n'
             << "leftover_bound " << f.leftover_bound << '\n'
             << "within_bound " << (f.within_bound ? "yes" : "no") << '\n';
        for (const auto& k : f.k4s) text << k[0] << ' ' << k[1] << ' ' << k[2] << ' ' << k[3] << '\n';
        body = {{"threshold", f.threshold},       {"k4s", f.k4s},
                {"leftover", f.leftover},         {"leftover_bound", f.leftover_bound},
                {"within_bound", f.within_bound}, {"pruned", f.pruned},
                {"weight", f.tiling.weight}};
      } else {
        const int thr = tile_threshold.value_or(static_cast<int>(std::ceil((0.75 + sh.cfg.alpha) * h.n() - 1e-9)));
        const GoodPairOracle oracle = classify_pairs(h, thr);
        const Tiling t = weighted_tiling(h, VertexSet::all(h.n()), oracle, sh.cfg.seed);
        text << "threshold " << thr << '\n' << "weight " << t.weight << '\n';
        for (const auto& tl : t.tiles) {
          for (std::size_t i = 0; i < tl.size(); ++i) text << (i ? " " : "") << tl[i];
          text << '\n';
        }
        body = {{"threshold", thr}, {"weight", t.weight}, {"tiles", tiles_json(t)}};
      }
      ses.emit("tile", true, text.str(), body);
      return kOk;
    }

    if (cover->parsed()) {
      const Hypergraph3 h = ses.load();
      const CoverResult c = cover_with_squared_paths(h, sh.cfg.q, sh.cfg.mu, sh.cfg.seed);
      std::ostringstream text;
      json paths = json::array();
      for (const auto& p : c.paths) {
        text << format_sequence(p) << '\n';
        paths.push_back(p.vertices);
      }
      text << "# uncovered " << c.uncovered << " of " << c.domain_size << ", within mu: " << (c.within_mu ? "yes" : "no")
           << '\n';
      ses.emit("cover", true, text.str(),
               {{"paths", paths}, {"uncovered", c.uncovered}, {"domain_size", c.domain_size}, {"within_mu", c.within_mu}});
      return kOk;
    }

    if (absorb_cmd->parsed()) {
      if (!absorb_demo) throw ArgumentError("absorb currently runs only with --demo");
      const Hypergraph3 h = ses.load();
      const int n = h.n();
      const Reservoir none{VertexSet(n), VertexSet(n)};
      const AbsorberFamily fam = build_absorber_family(h, none, sh.cfg);
      std::ostringstream text;
      json body{{"family_size", fam.tuples.size()}};
      if (fam.tuples.empty()) {
        ses.emit("absorb", true, "failure: no absorbers\n", {{"outcome", "failure"}, {"detail", "no absorbers"}});
        return kOutcome;
      }
      VertexSeq pa;
      try {
        pa = build_absorbing_path(h, fam, none, sh.cfg);
      } catch (const ConstructionError& e) {
        ses.emit("absorb", true, std::string("failure: ") + e.what() + "\n",
                 {{"outcome", "failure"}, {"detail", e.what()}});
        return kOutcome;
      }
      // Greedy: each candidate claims its first unclaimed family absorber.
      VertexSet on_pa(n);
      for (int v : pa.vertices) on_pa.insert(v);
      std::vector<char> claimed(fam.tuples.size(), 0);
      std::vector<int> x;
      for (int v = 0; v < n; ++v) {
        if (on_pa.contains(v)) continue;
        for (int idx : fam.per_vertex_index[static_cast<std::size_t>(v)])
          if (!claimed[static_cast<std::size_t>(idx)]) {
            claimed[static_cast<std::size_t>(idx)] = 1;
            x.push_back(v);
            break;
          }
      }
      const VertexSeq pstar = absorb(h, pa, fam, x);
      const bool ok = is_squared_path(h, pstar);
      text << "P_A " << format_sequence(pa) << '\n' << "X";
      for (int v : x) text << ' ' << v;
      text << '\n' << "P* " << format_sequence(pstar) << '\n' << "certified " << (ok ? "yes" : "no") << '\n';
      body.update({{"outcome", "absorbed"},
                   {"absorbing_path", pa.vertices},
                   {"absorbed", x},
                   {"result", pstar.vertices},
                   {"certified", ok}});
      ses.emit("absorb", true, text.str(), body);
      return ok ? kOk : kOutcome;
    }

    if (cons->parsed()) {
      const Hypergraph3 h = ses.load();
      const ConstructionReport r = construct_squared_hamiltonian(h, sh.cfg);
      const StageStats& st = r.stats;
      json stats{{"reservoir_size", st.reservoir_size},
                 {"family_size", st.family_size},
                 {"family_degraded", st.family_degraded},
                 {"absorbing_path_size", st.absorbing_path_size},
                 {"cover_paths", st.cover_paths},
                 {"cover_uncovered", st.cover_uncovered},
                 {"reservoir_used", st.reservoir_used},
                 {"reservoir_budget_ok", st.reservoir_budget_ok},
                 {"leftover", st.leftover}};
      std::ostringstream text;
      json body{{"attempts", r.attempts}, {"stats", stats}};
      if (r.success()) {
        text << "cycle " << format_sequence(*r.cycle) << '\n';
        body["outcome"] = "cycle";
        body["cycle"] = r.cycle->vertices;
      } else {
        text << "failure " << r.failed_stage << ": " << r.detail << '\n';
        body["outcome"] = "failure";
        body["stage"] = r.failed_stage;
        body["detail"] = r.detail;
      }
      text << "# attempts " << r.attempts << '\n';
      for (auto it = stats.begin(); it != stats.end(); ++it) text << "# " << it.key() << ' ' << it.value().dump() << '\n';
      if (cons_timings) {
        json t = json::object();
        for (const auto& [stage, ms] : st.timings_ms) {
          t[stage] = ms;
          text << "# time_ms " << stage << ' ' << ms << '\n';
        }
        body["timings_ms"] = t;
      }
      ses.emit("construct", true, text.str(), body);
      return r.success() ? kOk : kOutcome;
    }

    if (orc->parsed()) {
      const Hypergraph3 h = ses.load();
      if (orc_limit_ms <= 0) throw ArgumentError("time limit must be positive");
      const std::chrono::milliseconds limit{orc_limit_ms};
      std::ostringstream text;
      json body{{"kind", orc_kind}};
      Verdict v;
      if (orc_kind == "cycle") {
        const auto r = oracle_has_squared_hamiltonian(h, limit);
        v = r.verdict;
        text << to_string(v) << '\n';
        if (r.witness) {
          text << format_sequence(*r.witness) << '\n';
          body["witness"] = r.witness->vertices;
        }
      } else {
        const auto r = oracle_has_perfect_k4_tiling(h, limit);
        v = r.verdict;
        text << to_string(v) << '\n';
        for (const auto& k : r.tiles) text << k[0] << ' ' << k[1] << ' ' << k[2] << ' ' << k[3] << '\n';
        if (v == Verdict::yes) body["tiles"] = r.tiles;
      }
      body["verdict"] = std::string(to_string(v));
      ses.emit("oracle", false, text.str(), body);
      return v == Verdict::timeout ? kOutcome : kOk;
    }

    if (probe->parsed()) {
      if (probe_limit_ms <= 0) throw ArgumentError("time limit must be positive");
      popt.seed = sh.cfg.seed;
      popt.time_limit = std::chrono::milliseconds{probe_limit_ms};
      popt.mode = probe_mode == "exact" ? ProbeMode::exact
                  : probe_mode == "pipeline" ? ProbeMode::pipeline
                                             : ProbeMode::both;
      popt.config = sh.cfg;
      const auto rows = threshold_probe(popt);
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back({{"fraction", r.fraction},
                       {"trial", r.trial},
                       {"min_pair_degree", r.min_pair_degree},
                       {"oracle", r.oracle},
                       {"pipeline", r.pipeline},
                       {"agreement", r.agreement}});
      ses.emit("probe", true, probe_csv(rows), {{"rows", arr}});
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kOutcome;
  } catch (const AbsorptionError& e) {
    err << "absorption failed: " << e.what() << '\n';
    return kOutcome;
  }
  return kUsage;
}

}  // namespace hypersquare::cli
