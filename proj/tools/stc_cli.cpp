#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stc/error.hpp"
#include "stc/service.hpp"

using namespace stc;
namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::NotFound, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

json parse_json(const std::string& text, const std::string& what) {
  auto j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::InvalidArgument, what + " is not valid JSON");
  return j;
}

// A JSON document from a file, or an embedded catalog data file ("maps/dod_to_pet.json", "dod_to_pet").
json load_document(const std::string& where, const std::string& folder) {
  if (fs::exists(where)) return parse_json(read_file(where), where);
  for (auto candidate : {where, folder + "/" + where, folder + "/" + where + ".json", where + ".json"})
    if (auto f = catalog_file(candidate)) return parse_json(std::string(*f), candidate);
  fail(ErrorKind::NotFound, "no file or catalog document '" + where + "'");
}

// Graph JSON file or catalog key. A file whose name is a catalog key must match that entry.
GraphPtr load_graph(const std::string& where) {
  if (!fs::exists(where)) return catalog_graph(where);
  Graph g = graph_from_json(parse_json(read_file(where), where));
  if (!g.name().empty()) {
    try {
      auto cat = catalog_graph(g.name());
      if (cat->same_edges(g)) return cat;
    } catch (const Error&) {
    }
  }
  return std::make_shared<const Graph>(std::move(g));
}

Coloring load_coloring(const std::string& where) {
  if (!fs::exists(where)) return catalog_coloring(catalog(where));
  return coloring_from_json(parse_json(read_file(where), where));
}

const CatalogEntry& entry_for(const Graph& g) {
  if (g.name().empty()) fail(ErrorKind::InvalidArgument, "graph has no name; cannot look up its catalog entry");
  const auto& e = catalog(g.name());
  if (!e.graph->same_edges(g)) fail(ErrorKind::Mismatch, "graph differs from catalog entry '" + g.name() + "'");
  return e;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "expected comma-separated integers, got '" + s + "'");
    }
  }
  return out;
}

struct ColoringSource {
  std::string coloring, graph, pattern, hamilton;
  bool from_catalog = false, default_lacunar = false;

  void add(CLI::App* app, bool allow_coloring) {
    if (allow_coloring) app->add_option("--coloring", coloring, "Coloring JSON file or catalog key");
    app->add_option("--graph", graph, "Graph JSON file or catalog key");
    app->add_option("--pattern", pattern, "color pattern, e.g. \"(1_2 0_1 2_0)^10\"");
    app->add_flag("--pattern-from-catalog", from_catalog, "use the catalog pattern of the graph");
    app->add_flag("--default-lacunar", default_lacunar, "use default_lacunar_stc");
    app->add_option("--hamilton", hamilton, "Hamilton cycle as comma-separated vertices");
  }

  Coloring resolve() const {
    if (!coloring.empty()) return load_coloring(coloring);
    if (graph.empty()) fail(ErrorKind::InvalidArgument, "need --coloring or --graph");
    GraphPtr g = load_graph(graph);
    std::optional<HamiltonDecomposition> ham;
    if (!hamilton.empty()) ham = verify_hamilton(*g, parse_ints(hamilton));
    if (from_catalog) {
      const auto& e = entry_for(*g);
      if (!e.pattern) fail(ErrorKind::NotFound, "catalog entry '" + e.key + "' has no pattern");
      return apply_pattern(e.graph, ham ? *ham : *e.hamilton, *e.pattern);
    }
    if (!ham) {
      try {
        ham = entry_for(*g).hamilton;
      } catch (const Error&) {
      }
    }
    if (!pattern.empty()) {
      if (!ham) fail(ErrorKind::InvalidArgument, "--pattern needs a Hamilton cycle (--hamilton)");
      return apply_pattern(g, *ham, pattern);
    }
    if (default_lacunar) {
      if (!ham) fail(ErrorKind::InvalidArgument, "--default-lacunar needs a Hamilton cycle (--hamilton)");
      return default_lacunar_stc(g, *ham);
    }
    // a catalog graph starts from its catalog coloring
    try {
      if (hamilton.empty()) return catalog_coloring(entry_for(*g));
    } catch (const Error&) {
    }
    return construct_stc(g);
  }
};

std::string step_line(const ReductionStep& s) {
  std::ostringstream os;
  os << (s.kind == MoveKind::Flip ? "flip" : "swap") << " k=" << s.path.length() << " (" << s.path.c0 << ","
     << s.path.c1 << ") [";
  for (size_t i = 0; i < s.path.vertices.size(); ++i) os << (i ? "," : "") << s.path.vertices[i];
  os << "] (beta,gamma) " << s.before.first << "," << s.before.second << " -> " << s.after.first << ","
     << s.after.second << "  " << s.cls.label();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-total and total coloring engine"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string out;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "machine-readable output");
    sub->add_option("--out,-o", out, "output file (default stdout)");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "build a graph");
  std::string g_catalog, g_lcf, g_gp, g_expand, g_name;
  int g_n = 0, g_mob = 0, g_fmob = 0, g_prism = 0, g_cycle = 0, g_complete = 0;
  std::int64_t g_haar = 0;
  gen->add_option("--catalog", g_catalog, "catalog key");
  gen->add_option("--lcf", g_lcf, "LCF notation, plain or extended");
  gen->add_option("--n", g_n, "vertex count for extended LCF");
  gen->add_option("--haar", g_haar, "Haar graph H(N)");
  gen->add_option("--mobius", g_mob, "Mobius ladder Mob_r");
  gen->add_option("--fat-mobius", g_fmob, "Fat-Mobius ladder FMob_r");
  gen->add_option("--prism", g_prism, "prism C_m x K_2");
  gen->add_option("--gp", g_gp, "generalized Petersen m,k");
  gen->add_option("--cycle", g_cycle, "cycle C_n");
  gen->add_option("--complete", g_complete, "complete graph K_n");
  gen->add_option("--expand", g_expand, "vertex expansion: K23 or K23_with_one_triangle");
  gen->add_option("--name", g_name, "graph name");
  common(gen);

  // color
  auto* color = app.add_subcommand("color", "build a coloring from a pattern or default_lacunar_stc");
  ColoringSource c_src;
  c_src.add(color, false);
  common(color);

  auto* validate_cmd = app.add_subcommand("validate", "check STC/TC conditions");
  std::string v_col;
  validate_cmd->add_option("--coloring", v_col, "coloring file or catalog key")->required();
  common(validate_cmd);

  auto* listing_cmd = app.add_subcommand("listing", "per-color class listing");
  std::string l_col, l_name;
  listing_cmd->add_option("--coloring", l_col, "coloring file or catalog key")->required();
  listing_cmd->add_option("--name", l_name, "label for the summary line");
  common(listing_cmd);

  auto* mcaps_cmd = app.add_subcommand("mcaps", "enumerate MCAPs");
  std::string m_col;
  std::optional<int> m_c0, m_c1;
  mcaps_cmd->add_option("--coloring", m_col, "coloring file or catalog key")->required();
  mcaps_cmd->add_option("--c0", m_c0, "color filter");
  mcaps_cmd->add_option("--c1", m_c1, "color filter");
  common(mcaps_cmd);

  auto* swap_cmd = app.add_subcommand("swap", "apply an MCAP swap");
  std::string s_col, s_path;
  std::optional<int> s_start;
  int s_c0 = -1, s_c1 = -1;
  swap_cmd->add_option("--coloring", s_col, "coloring file or catalog key")->required();
  swap_cmd->add_option("--start", s_start, "start vertex (path is traced)");
  swap_cmd->add_option("--path", s_path, "explicit path v0,e1,v1,...");
  swap_cmd->add_option("--c0", s_c0, "first color")->required();
  swap_cmd->add_option("--c1", s_c1, "second color")->required();
  common(swap_cmd);

  auto* flip_cmd = app.add_subcommand("flip", "flip a beta-edge");
  std::string f_col, f_edge;
  flip_cmd->add_option("--coloring", f_col, "coloring file or catalog key")->required();
  flip_cmd->add_option("--edge", f_edge, "edge index or u,v")->required();
  common(flip_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "best-first reduction search");
  ColoringSource r_src;
  r_src.add(reduce_cmd, true);
  std::string r_goal = "equitable_tc";
  std::int64_t r_budget = 100000;
  std::uint64_t r_seed = 0;
  std::string r_trace;
  reduce_cmd->add_option("--goal", r_goal, "tc | equitable-tc | equitable-stc | min-beta-gamma");
  reduce_cmd->add_option("--budget", r_budget, "search node budget");
  reduce_cmd->add_option("--seed", r_seed, "tie-break seed");
  reduce_cmd->add_option("--trace", r_trace, "also write the trace JSON here");
  common(reduce_cmd);

  auto* replay_cmd = app.add_subcommand("replay", "replay a trace JSON (file or catalog trace)");
  std::string rp_trace;
  replay_cmd->add_option("--trace", rp_trace, "trace file or catalog key")->required();
  common(replay_cmd);

  auto* lift_cmd = app.add_subcommand("lift", "lift a coloring through a covering map");
  std::string li_map, li_col;
  lift_cmd->add_option("--map", li_map, "covering map JSON (file or catalog map name)")->required();
  lift_cmd->add_option("--coloring", li_col, "coloring of the target graph")->required();
  common(lift_cmd);

  auto* cover_cmd = app.add_subcommand("verify-cover", "check a covering map");
  std::string vc_map;
  cover_cmd->add_option("--map", vc_map, "covering map JSON (file or catalog map name)")->required();
  common(cover_cmd);

  auto* codes_cmd = app.add_subcommand("codes", "perfect code report");
  std::string co_col;
  codes_cmd->add_option("--coloring", co_col, "coloring file or catalog key")->required();
  common(codes_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "exact values on small graphs");
  std::string o_graph, o_what = "all", o_cache;
  int o_cap = 26;
  bool o_large = false;
  oracle_cmd->add_option("--graph", o_graph, "graph file, catalog key, Cn or Kn")->required();
  oracle_cmd->add_option("--what", o_what, "chi | beta | gamma | all");
  oracle_cmd->add_option("--cap", o_cap, "element cap");
  oracle_cmd->add_flag("--allow-large", o_large, "allow instances above the cap");
  oracle_cmd->add_option("--cache", o_cache, "result cache directory");
  common(oracle_cmd);

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  ColoringSource d_src;
  d_src.add(dot_cmd, true);
  bool d_circular = false, d_plain = false;
  dot_cmd->add_flag("--circular", d_circular, "place the Hamilton cycle on a circle");
  dot_cmd->add_flag("--uncolored", d_plain, "graph only");
  common(dot_cmd);

  auto* serve_cmd = app.add_subcommand("serve", "HTTP session service");
  std::string sv_host = "127.0.0.1", sv_static, sv_persist;
  int sv_port = 8080;
  serve_cmd->add_option("--host", sv_host, "bind address");
  serve_cmd->add_option("--port", sv_port, "port");
  serve_cmd->add_option("--static", sv_static, "directory with the UI bundle");
  serve_cmd->add_option("--persist", sv_persist, "directory for session traces");

  auto* req_cmd = app.add_subcommand("request", "run one API request in-process");
  std::string rq_method, rq_path, rq_body, rq_persist;
  req_cmd->add_option("method", rq_method, "GET or POST")->required();
  req_cmd->add_option("path", rq_path, "e.g. /sessions/s1/mcaps?c0=1&c1=3")->required();
  req_cmd->add_option("--body", rq_body, "JSON body");
  req_cmd->add_option("--persist", rq_persist, "session directory");
  common(req_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      std::optional<Graph> g;
      int sources = !g_catalog.empty() + !g_lcf.empty() + (g_haar > 0) + (g_mob > 0) + (g_fmob > 0) + (g_prism > 0) +
                    !g_gp.empty() + (g_cycle > 0) + (g_complete > 0);
      if (sources != 1) {
        std::cerr << "gen: give exactly one graph source\n";
        return 2;
      }
      if (!g_catalog.empty()) g = *catalog(g_catalog).graph;
      if (!g_lcf.empty()) {
        auto lcf = parse_lcf(g_lcf);
        bool multi = false;
        for (auto& grp : lcf.groups) multi |= grp.size() > 1;
        if (multi || g_n > 0) {
          auto r = from_extended_lcf(lcf, g_n > 0 ? g_n : lcf.positions());
          std::cerr << "validation: " << r.validation.detail << " (girth "
                    << (r.validation.girth ? std::to_string(*r.validation.girth) : "infinity") << ")\n";
          g = r.graph;
        } else {
          g = from_lcf(lcf).graph;
        }
      }
      if (g_haar > 0) g = haar(g_haar);
      if (g_mob > 0) g = mobius_ladder(g_mob);
      if (g_fmob > 0) g = fat_mobius(g_fmob);
      if (g_prism > 0) g = prism(g_prism).graph;
      if (!g_gp.empty()) {
        auto mk = parse_ints(g_gp);
        if (mk.size() != 2) fail(ErrorKind::InvalidArgument, "--gp needs m,k");
        g = generalized_petersen(mk[0], mk[1]);
      }
      if (g_cycle > 0) g = cycle_graph(g_cycle);
      if (g_complete > 0) g = complete_graph(g_complete);
      if (!g_expand.empty()) {
        if (g_expand != "K23" && g_expand != "K23_with_one_triangle")
          fail(ErrorKind::InvalidArgument, "--expand must be K23 or K23_with_one_triangle");
        g = vertex_expand(*g, g_expand == "K23" ? ExpandVariant::K23 : ExpandVariant::K23WithOneTriangle);
      }
      if (!g_name.empty()) g = g->renamed(g_name);
      write_out(dump(graph_to_json(*g)), out);
      return 0;
    }
    if (*color) {
      Coloring mu = c_src.resolve();
      write_out(dump(coloring_to_json(mu)), out);
      if (!out.empty() && !as_json) std::cout << format_listing(listing(mu), label_for(mu.graph()));
      return 0;
    }
    if (*validate_cmd) {
      Coloring mu = load_coloring(v_col);
      auto r = validate(mu);
      if (as_json) {
        write_out(dump(validation_to_json(r)), out);
      } else {
        std::ostringstream os;
        os << "proper edges: " << (r.proper_edges ? "yes" : "no") << "\nvertex/edge: "
           << (r.vertex_incidence ? "yes" : "no") << "\nvertex/vertex: " << (r.vertex_adjacency ? "yes" : "no")
           << "\nSTC: " << (r.is_stc() ? "yes" : "no") << "\nTC: " << (r.is_tc() ? "yes" : "no") << "\n";
        for (auto& v : r.violations)
          os << "  " << v.a.str() << " ~ " << v.b.str() << " color " << v.color << "\n";
        write_out(os.str(), out);
      }
      return 0;
    }
    if (*listing_cmd) {
      Coloring mu = load_coloring(l_col);
      std::string label = l_name.empty() ? label_for(mu.graph()) : l_name;
      auto l = listing(mu);
      if (as_json)
        write_out(dump(listing_to_json(l, label)), out);
      else
        write_out(format_listing(l, label) + "beta=" + std::to_string(l.beta) + " gamma=" + std::to_string(l.gamma) +
                      (l.is_tc ? " TC" : l.is_stc ? " STC" : " invalid") + (l.is_equitable ? " equitable" : "") + "\n",
                  out);
      return 0;
    }
    if (*mcaps_cmd) {
      Coloring mu = load_coloring(m_col);
      std::optional<std::pair<int, int>> filter;
      if (m_c0.has_value() != m_c1.has_value()) {
        std::cerr << "mcaps: give both --c0 and --c1\n";
        return 2;
      }
      if (m_c0) filter = std::make_pair(*m_c0, *m_c1);
      json j = op_mcaps(mu, filter);
      if (as_json) {
        write_out(dump(j), out);
      } else {
        std::ostringstream os;
        for (auto& m : j["mcaps"])
          os << "k=" << m["k"] << " (" << m["colors"][0] << "," << m["colors"][1] << ") " << m["vertices"].dump()
             << " -> (beta,gamma)=" << m["after"][0] << "," << m["after"][1] << " " << m["class"].get<std::string>()
             << "\n";
        for (auto& f : j["flips"]) os << "beta-edge e" << f["edge"] << " " << f["vertices"].dump() << "\n";
        os << j["count"] << " MCAPs, " << j["flips"].size() << " beta-edges\n";
        write_out(os.str(), out);
      }
      return 0;
    }
    if (*swap_cmd || *flip_cmd) {
      Coloring mu = load_coloring(*swap_cmd ? s_col : f_col);
      Mcap m;
      MoveKind kind = MoveKind::Swap;
      if (*swap_cmd) {
        if (s_start.has_value() == !s_path.empty()) {
          std::cerr << "swap: give exactly one of --start and --path\n";
          return 2;
        }
        if (s_start) {
          auto t = trace_alternating(mu, *s_start, s_c0, s_c1);
          if (!t) fail(ErrorKind::Mismatch, "no MCAP from that vertex with those colors");
          m = *t;
        } else {
          std::vector<ElementRef> refs;
          std::stringstream ss(s_path);
          std::string tok;
          while (std::getline(ss, tok, ',')) refs.push_back(ElementRef::parse(tok));
          m = Mcap::from_path(refs, s_c0, s_c1);
        }
      } else {
        kind = MoveKind::Flip;
        auto uv = parse_ints(f_edge);
        int e = uv.size() == 1 ? uv[0] : -1;
        if (uv.size() == 2) {
          auto id = mu.graph().edge_between(uv[0], uv[1]);
          if (!id) fail(ErrorKind::InvalidArgument, "no such edge");
          e = *id;
        }
        m = beta_edge_move(mu, e);
      }
      auto step = apply_move(mu, kind, m);
      if (as_json) {
        write_out(dump(op_step(step, mu, label_for(mu.graph()))), out);
      } else {
        if (!out.empty()) write_out(dump(coloring_to_json(mu)), out);
        std::cout << step_line(step) << "\n" << format_listing(listing(mu), label_for(mu.graph()));
      }
      return 0;
    }
    if (*reduce_cmd) {
      Coloring mu = r_src.resolve();
      SearchOptions opts;
      opts.budget = r_budget;
      opts.seed = r_seed;
      auto tr = reduce(mu, parse_goal(r_goal), opts);
      json j = trace_to_json(tr);
      if (!r_trace.empty()) write_out(dump(j), r_trace);
      if (as_json) {
        write_out(dump(j), out);
      } else {
        std::ostringstream os;
        for (auto& s : tr.steps) os << step_line(s) << "\n";
        auto l = listing(tr.final);
        os << format_listing(l, label_for(tr.final.graph()));
        os << "beta=" << l.beta << " gamma=" << l.gamma << " goal " << goal_name(tr.goal)
           << (tr.reached ? " reached" : " not reached") << " in " << tr.steps.size() << " steps (" << tr.nodes
           << " nodes)\n";
        write_out(os.str(), out);
      }
      return tr.reached || tr.goal == Goal::MinBetaGamma ? 0 : 1;
    }
    if (*replay_cmd) {
      json tj;
      if (fs::exists(rp_trace))
        tj = parse_json(read_file(rp_trace), rp_trace);
      else if (auto& e = catalog(rp_trace); e.trace)
        tj = parse_json(*e.trace, rp_trace);
      else
        fail(ErrorKind::NotFound, "catalog entry '" + rp_trace + "' has no trace");
      auto doc = trace_from_json(tj);
      Coloring cur = doc.initial;
      std::ostringstream os;
      std::string label = label_for(cur.graph());
      for (auto& s : doc.steps) {
        auto got = apply_move(cur, s.kind, s.path);
        if (s.before.first >= 0 && (got.before != s.before || got.after != s.after))
          fail(ErrorKind::Mismatch, "recorded values differ at: " + step_line(got));
        os << step_line(got) << "  " << listing_tuple(listing(cur), label) << "\n";
      }
      if (as_json)
        write_out(dump(op_view(cur, label)), out);
      else
        write_out(os.str() + format_listing(listing(cur), label), out);
      return 0;
    }
    if (*lift_cmd) {
      CoveringMap cm = covering_from_json(load_document(li_map, "maps"));
      Coloring mup = load_coloring(li_col);
      Coloring mu = lift_coloring(cm, mup);
      auto l = listing(mu);
      if (as_json) {
        json j = op_view(mu, label_for(mu.graph()));
        j["fold"] = cm.fold;
        write_out(dump(j), out);
      } else {
        if (!out.empty()) write_out(dump(coloring_to_json(mu)), out);
        std::cout << "fold " << cm.fold << "\n"
                  << format_listing(l, label_for(mu.graph())) << "beta=" << l.beta << " gamma=" << l.gamma
                  << (l.is_tc ? " TC" : " STC") << (l.is_equitable ? " equitable" : " not equitable") << "\n";
      }
      return 0;
    }
    if (*cover_cmd) {
      CoveringMap cm = covering_from_json(load_document(vc_map, "maps"));
      if (as_json)
        write_out(dump(covering_to_json(cm)), out);
      else
        write_out(cm.source->name() + " -> " + cm.target->name() + ": " + std::to_string(cm.fold) + "-fold covering\n",
                  out);
      return 0;
    }
    if (*codes_cmd) {
      Coloring mu = load_coloring(co_col);
      auto r = code_report(mu);
      if (as_json) {
        write_out(dump(code_report_to_json(r)), out);
      } else {
        std::ostringstream os;
        for (auto& c : r.classes)
          os << c.color << ": " << c.vertices.size() << " vertices" << (c.perfect_code ? ", perfect code" : "")
             << (c.total_perfect_code ? ", total perfect code" : "") << "\n";
        os << "efficient TC: " << (r.efficient_tc ? "yes" : "no") << "\n";
        if (r.total_perfect_rank) os << "total-perfect rank: " << *r.total_perfect_rank << "\n";
        os << r.note << "\n";
        write_out(os.str(), out);
      }
      return 0;
    }
    if (*oracle_cmd) {
      GraphPtr g;
      if (!fs::exists(o_graph) && o_graph.size() > 1 && (o_graph[0] == 'C' || o_graph[0] == 'K') &&
          o_graph.find_first_not_of("0123456789", 1) == std::string::npos) {
        int k = std::stoi(o_graph.substr(1));
        g = std::make_shared<const Graph>(o_graph[0] == 'C' ? cycle_graph(k) : complete_graph(k));
      } else {
        g = load_graph(o_graph);
      }
      OracleOptions opts{o_cap, o_large};
      std::optional<OracleCache> cache;
      if (!o_cache.empty()) cache.emplace(o_cache);
      json j;
      auto run = [&](const std::string& op, auto fn) {
        if (cache)
          if (auto hit = cache->get(op, *g, o_cap)) return oracle_to_json(*hit);
        auto r = fn(*g, opts);
        if (cache) cache->put(op, *g, o_cap, r);
        return oracle_to_json(r);
      };
      if (o_what != "chi" && o_what != "beta" && o_what != "gamma" && o_what != "all") {
        std::cerr << "oracle: --what must be chi, beta, gamma or all\n";
        return 2;
      }
      if (o_what == "chi" || o_what == "all") j["total_chromatic"] = run("chi", exact_total_chromatic);
      if (o_what == "beta" || o_what == "all") j["min_beta"] = run("beta", min_beta);
      if (o_what == "gamma" || o_what == "all") j["min_gamma"] = run("gamma", min_gamma);
      if (as_json) {
        write_out(dump(j), out);
      } else {
        std::ostringstream os;
        for (auto& [k, v] : j.items())
          os << k << ": " << (v["value"].is_null() ? (v["cap_hit"].get<bool>() ? "cap hit" : "no TC") : v["value"].dump())
             << " (" << v["elements"] << " elements, " << v["nodes"] << " nodes)\n";
        write_out(os.str(), out);
      }
      return 0;
    }
    if (*dot_cmd) {
      DotOptions opts;
      std::string text;
      if (d_plain) {
        if (d_src.graph.empty()) fail(ErrorKind::InvalidArgument, "--uncolored needs --graph");
        GraphPtr g = load_graph(d_src.graph);
        if (d_circular) {
          try {
            opts.circular = entry_for(*g).hamilton;
          } catch (const Error&) {
          }
          if (!d_src.hamilton.empty()) opts.circular = verify_hamilton(*g, parse_ints(d_src.hamilton));
        }
        text = to_dot(*g, opts);
      } else {
        Coloring mu = d_src.resolve();
        if (d_circular) {
          try {
            opts.circular = entry_for(mu.graph()).hamilton;
          } catch (const Error&) {
          }
          if (!d_src.hamilton.empty()) opts.circular = verify_hamilton(mu.graph(), parse_ints(d_src.hamilton));
        }
        text = to_dot(mu, opts);
      }
      write_out(text, out);
      return 0;
    }
    if (*serve_cmd) {
      auto store = std::make_shared<SessionStore>(sv_persist.empty() ? std::nullopt
                                                                     : std::optional<fs::path>(sv_persist));
      Service service(store);
      return run_server(service, sv_host, sv_port, sv_static);
    }
    if (*req_cmd) {
      auto store = std::make_shared<SessionStore>(rq_persist.empty() ? std::nullopt
                                                                     : std::optional<fs::path>(rq_persist));
      Service service(store);
      std::map<std::string, std::string> query;
      std::string path = rq_path;
      if (auto q = path.find('?'); q != std::string::npos) {
        std::stringstream ss(path.substr(q + 1));
        std::string kv;
        while (std::getline(ss, kv, '&')) {
          auto eq = kv.find('=');
          if (eq != std::string::npos) query[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        path = path.substr(0, q);
      }
      auto r = service.handle(rq_method, path, query, rq_body);
      write_out(r.text.empty() ? dump(r.body) : r.text, out);
      return r.status < 400 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
