#include "stc/service.hpp"

#include <httplib.h>

#include <sstream>

#include "stc/error.hpp"

namespace stc {

std::string label_for(const Graph& g) {
  if (g.name().empty()) return "G";
  try {
    return catalog(g.name()).label;
  } catch (const Error&) {
    return g.name();
  }
}

json op_catalog() {
  json out = json::array();
  for (auto& key : catalog_keys()) {
    json j;
    j["key"] = key;
    try {
      if (key == "mobius_ladder_3k") {
        j["parametric"] = true;
        j["example"] = key + ":2";
        out.push_back(j);
        continue;
      }
      const auto& e = catalog(key);
      j["label"] = e.label;
      j["n"] = e.graph->n();
      j["m"] = e.graph->m();
      j["max_degree"] = e.graph->max_degree();
      j["hamiltonian"] = e.hamilton.has_value();
      j["pattern"] = e.pattern ? json(*e.pattern) : json(nullptr);
      j["has_trace"] = e.trace.has_value();
      j["provenance"] = e.provenance;
      if (e.validation) j["validation"] = e.validation->detail;
    } catch (const Error& ex) {
      j["error"] = ex.what();
    }
    out.push_back(j);
  }
  return json{{"entries", out}};
}

json op_view(const Coloring& mu, const std::string& label) {
  json j;
  auto l = listing(mu);
  j["coloring"] = coloring_to_json(mu);
  j["listing"] = listing_to_json(l, label);
  j["validation"] = validation_to_json(validate(mu));
  j["beta_edges"] = beta_edges(mu);
  j["text"] = format_listing(l, label);
  return j;
}

json op_mcaps(const Coloring& mu, std::optional<std::pair<int, int>> filter) {
  json arr = json::array();
  for (auto& m : enumerate_mcaps(mu, filter)) {
    json j = mcap_to_json(m);
    Coloring after = swap(mu, m);
    auto la = listing(after), lb = listing(mu);
    j["after"] = {la.beta, la.gamma};
    j["class"] = classify_values(lb.beta, lb.gamma, la.beta, la.gamma).label();
    arr.push_back(std::move(j));
  }
  json flips = json::array();
  for (int e : beta_edges(mu)) {
    auto m = beta_edge_move(mu, e);
    json j = mcap_to_json(m);
    j["edge"] = e;
    flips.push_back(std::move(j));
  }
  return json{{"mcaps", arr}, {"count", arr.size()}, {"flips", flips}};
}

json op_step(const ReductionStep& step, const Coloring& after, const std::string& label) {
  json j = op_view(after, label);
  j["step"] = step_to_json(step);
  return j;
}

namespace {

int status_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return 400;
    case ErrorKind::Unsupported: return 400;
    case ErrorKind::NotFound: return 404;
    case ErrorKind::Mismatch: return 409;
    case ErrorKind::InvalidColoring: return 422;
  }
  return 500;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::NotFound: return "not_found";
    case ErrorKind::Mismatch: return "mismatch";
    case ErrorKind::InvalidColoring: return "invalid_coloring";
  }
  return "error";
}

Response error_response(int status, const std::string& kind, const std::string& msg) {
  return {status, json{{"error", msg}, {"kind", kind}}};
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path) {
    if (c == '/') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

json session_view(const Session& s) {
  json j = op_view(s.current, s.label);
  j["id"] = s.id;
  j["label"] = s.label;
  j["graph"] = graph_to_json(s.current.graph());
  j["steps"] = s.undo.size();
  j["can_undo"] = !s.undo.empty();
  j["can_redo"] = !s.redo.empty();
  return j;
}

Coloring new_session_coloring(const json& body, std::string& label) {
  if (body.contains("coloring")) {
    Coloring mu = coloring_from_json(body["coloring"]);
    auto r = validate(mu);
    if (!r.is_stc()) {
      json detail = validation_to_json(r);
      throw Error(ErrorKind::InvalidColoring, "uploaded coloring is not semi-total: " + detail.dump());
    }
    label = label_for(mu.graph());
    return mu;
  }
  const CatalogEntry* entry = nullptr;
  GraphPtr g;
  std::optional<HamiltonDecomposition> ham;
  if (body.contains("catalog")) {
    entry = &catalog(body["catalog"].get<std::string>());
    g = entry->graph;
    ham = entry->hamilton;
    label = entry->label;
  } else if (body.contains("graph")) {
    g = resolve_graph(body["graph"]);
    label = label_for(*g);
  } else {
    fail(ErrorKind::InvalidArgument, "POST /sessions needs 'catalog', 'graph' or 'coloring'");
  }
  if (body.contains("hamilton")) ham = verify_hamilton(*g, body["hamilton"].get<std::vector<int>>());
  if (body.contains("pattern") && body["pattern"].is_string() && body["pattern"] != "catalog") {
    if (!ham) fail(ErrorKind::InvalidArgument, "a pattern needs a Hamilton cycle");
    return apply_pattern(g, *ham, body["pattern"].get<std::string>());
  }
  if (entry) return catalog_coloring(*entry);
  if (body.value("default_lacunar", false) && ham) return default_lacunar_stc(g, *ham);
  return construct_stc(g);
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, "bad integer for " + what + ": '" + s + "'");
  }
}

int edge_from_json(const Graph& g, const json& e) {
  if (e.is_number_integer()) return e.get<int>();
  if (e.is_string()) {
    auto r = ElementRef::parse(e.get<std::string>());
    if (r.is_vertex()) fail(ErrorKind::InvalidArgument, "expected an edge reference");
    return r.index;
  }
  if (e.is_array() && e.size() == 2) {
    auto id = g.edge_between(e[0].get<int>(), e[1].get<int>());
    if (!id) fail(ErrorKind::InvalidArgument, "no such edge");
    return *id;
  }
  fail(ErrorKind::InvalidArgument, "edge must be an index, \"eN\" or [u,v]");
}

}  // namespace

Service::Service(std::shared_ptr<SessionStore> store) : store_(std::move(store)) {}

Response Service::handle(const std::string& method, const std::string& path,
                         const std::map<std::string, std::string>& query, const std::string& body_text) {
  try {
    json body = json::object();
    if (!body_text.empty()) {
      body = json::parse(body_text, nullptr, false);
      if (body.is_discarded() || !body.is_object()) return error_response(400, "malformed", "request body is not a JSON object");
    }
    auto parts = split_path(path);
    auto method_is = [&](const char* m) { return method == m; };

    if (parts.size() == 1 && parts[0] == "catalog") {
      if (!method_is("GET")) return error_response(405, "method", "use GET");
      return {200, op_catalog()};
    }
    if (parts.empty() || parts[0] != "sessions") return error_response(404, "not_found", "no route " + path);
    if (parts.size() == 1) {
      if (method_is("GET")) return {200, json{{"sessions", store_->ids()}}};
      if (!method_is("POST")) return error_response(405, "method", "use POST");
      std::string label;
      Coloring mu = new_session_coloring(body, label);
      auto s = store_->create(mu, label);
      std::lock_guard lock(s->mu);
      return {201, session_view(*s)};
    }
    auto s = store_->get(parts[1]);
    std::lock_guard lock(s->mu);
    if (parts.size() == 2) {
      if (!method_is("GET")) return error_response(405, "method", "use GET");
      return {200, session_view(*s)};
    }
    if (parts.size() != 3) return error_response(404, "not_found", "no route " + path);
    const std::string& action = parts[2];

    if (action == "mcaps" && method_is("GET")) {
      std::optional<std::pair<int, int>> filter;
      bool has0 = query.count("c0"), has1 = query.count("c1");
      if (has0 != has1) return error_response(400, "invalid_argument", "give both c0 and c1 or neither");
      if (has0) filter = std::make_pair(parse_int(query.at("c0"), "c0"), parse_int(query.at("c1"), "c1"));
      return {200, op_mcaps(s->current, filter)};
    }
    if (action == "trace" && method_is("GET")) return {200, steps_to_json(s->initial, s->undo)};
    if (action == "export" && method_is("GET")) {
      std::string fmt = query.count("format") ? query.at("format") : "json";
      if (fmt == "json") return {200, coloring_to_json(s->current)};
      if (fmt == "dot") {
        DotOptions opts;
        try {
          opts.circular = catalog(s->current.graph().name()).hamilton;
        } catch (const Error&) {
        }
        Response r{200, json(nullptr), to_dot(s->current, opts), "text/vnd.graphviz"};
        return r;
      }
      return error_response(400, "invalid_argument", "format must be dot or json");
    }
    if (!method_is("POST")) return error_response(404, "not_found", "no route " + method + " " + path);

    Response r;
    if (action == "swap") {
      Mcap m;
      if (body.contains("path")) {
        m = mcap_from_json(body);
      } else if (body.contains("start") && body.contains("colors")) {
        auto t = trace_alternating(s->current, body["start"].get<int>(), body["colors"][0].get<int>(),
                                   body["colors"][1].get<int>());
        if (!t) return error_response(409, "mismatch", "no MCAP from that vertex with those colors");
        m = *t;
      } else {
        return error_response(400, "invalid_argument", "swap needs 'path' and 'colors'");
      }
      auto step = session_apply(*s, MoveKind::Swap, m);
      r = {200, op_step(step, s->current, s->label)};
    } else if (action == "flip") {
      if (!body.contains("edge")) return error_response(400, "invalid_argument", "flip needs 'edge'");
      int e = edge_from_json(s->current.graph(), body["edge"]);
      auto step = session_apply(*s, MoveKind::Flip, beta_edge_move(s->current, e));
      r = {200, op_step(step, s->current, s->label)};
    } else if (action == "undo") {
      session_undo(*s);
      r = {200, session_view(*s)};
    } else if (action == "redo") {
      session_redo(*s);
      r = {200, session_view(*s)};
    } else if (action == "auto") {
      Goal goal = parse_goal(body.value("goal", std::string("equitable_tc")));
      SearchOptions opts;
      opts.budget = body.value("budget", opts.budget);
      opts.seed = body.value("seed", opts.seed);
      auto tr = reduce(s->current, goal, opts);
      for (auto& st : tr.steps) session_apply(*s, st.kind, st.path);
      json j = session_view(*s);
      j["trace"] = trace_to_json(tr);
      r = {200, j};
    } else {
      return error_response(404, "not_found", "no route " + method + " " + path);
    }
    store_->persist(*s);
    return r;
  } catch (const Error& ex) {
    return error_response(status_for(ex.kind()), kind_name(ex.kind()), ex.what());
  } catch (const json::exception& ex) {
    return error_response(400, "malformed", ex.what());
  }
}

int run_server(Service& service, const std::string& host, int port, const std::string& static_dir) {
  httplib::Server srv;
  if (!static_dir.empty() && !srv.set_mount_point("/", static_dir)) {
    std::fprintf(stderr, "static directory %s not found\n", static_dir.c_str());
    return 1;
  }
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (auto& [k, v] : req.params) query[k] = v;
    Response r = service.handle(req.method, req.path, query, req.body);
    res.status = r.status;
    if (!r.text.empty())
      res.set_content(r.text, r.content_type);
    else
      res.set_content(dump(r.body), "application/json");
  };
  srv.Get(".*", forward);
  srv.Post(".*", forward);
  std::fprintf(stderr, "listening on %s:%d\n", host.c_str(), port);
  return srv.listen(host, port) ? 0 : 1;
}

}  // namespace stc
