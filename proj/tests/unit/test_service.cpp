#include <doctest.h>

#include <filesystem>

#include "stc/error.hpp"
#include "stc/service.hpp"

using namespace stc;

namespace {
struct Client {
  Service svc;
  explicit Client(std::shared_ptr<SessionStore> s = std::make_shared<SessionStore>()) : svc(std::move(s)) {}
  Response get(const std::string& path, std::map<std::string, std::string> q = {}) {
    return svc.handle("GET", path, q, "");
  }
  Response post(const std::string& path, const json& body) { return svc.handle("POST", path, {}, body.dump()); }
};
}  // namespace

TEST_CASE("Q3 session: swap, stale swap, undo, redo") {
  Client c;
  auto created = c.post("/sessions", {{"catalog", "q3"}, {"pattern", "catalog"}});
  REQUIRE(created.status == 201);
  std::string id = created.body["id"];
  CHECK(created.body["listing"]["beta"] == 2);
  CHECK(created.body["beta_edges"].size() == 2);

  auto mcaps = c.get("/sessions/" + id + "/mcaps", {{"c0", "1"}, {"c1", "3"}});
  REQUIRE(mcaps.status == 200);
  json chosen;
  for (auto& m : mcaps.body["mcaps"])
    if (m["class"] == "total-beta-gamma") chosen = m;
  REQUIRE_FALSE(chosen.is_null());

  auto swapped = c.post("/sessions/" + id + "/swap", {{"path", chosen["path"]}, {"colors", chosen["colors"]}});
  REQUIRE(swapped.status == 200);
  CHECK(swapped.body["listing"]["compressed"] == "Q3(5^4)");
  CHECK(swapped.body["listing"]["is_tc"] == true);
  CHECK(swapped.body["step"]["class"] == "total-beta-gamma");

  auto stale = c.post("/sessions/" + id + "/swap", {{"path", chosen["path"]}, {"colors", chosen["colors"]}});
  CHECK(stale.status == 409);
  CHECK(stale.body["kind"] == "mismatch");

  auto undone = c.post("/sessions/" + id + "/undo", json::object());
  CHECK(undone.status == 200);
  CHECK(undone.body["listing"]["beta"] == 2);
  CHECK(c.post("/sessions/" + id + "/undo", json::object()).status == 409);
  auto redone = c.post("/sessions/" + id + "/redo", json::object());
  CHECK(redone.body["listing"]["beta"] == 0);
  CHECK(c.get("/sessions/" + id + "/trace").body["steps"].size() == 1);
}

TEST_CASE("flip, auto and export routes") {
  Client c;
  auto s = c.post("/sessions", {{"catalog", "mcgee"}});
  std::string id = s.body["id"];
  int e = s.body["beta_edges"][0];
  auto f = c.post("/sessions/" + id + "/flip", {{"edge", e}});
  CHECK(f.status == 200);
  CHECK(f.body["step"]["kind"] == "flip");
  CHECK(c.post("/sessions/" + id + "/flip", {{"edge", "v3"}}).status == 400);

  auto p = c.post("/sessions", {{"catalog", "pappus"}});
  std::string pid = p.body["id"];
  auto a = c.post("/sessions/" + pid + "/auto", {{"goal", "equitable_tc"}});
  REQUIRE(a.status == 200);
  CHECK(a.body["trace"]["reached"] == true);
  bool beta_step = false, gamma_step = false;
  for (auto& st : a.body["trace"]["steps"]) {
    std::string cls = st["class"];
    beta_step |= cls.find("beta") != std::string::npos;
    gamma_step |= cls.find("gamma") != std::string::npos;
  }
  CHECK(beta_step);
  CHECK(gamma_step);

  auto dot = c.get("/sessions/" + pid + "/export", {{"format", "dot"}});
  CHECK(dot.status == 200);
  CHECK(dot.content_type == "text/vnd.graphviz");
  CHECK(dot.text.find("graph") != std::string::npos);
  CHECK(c.get("/sessions/" + pid + "/export", {{"format", "png"}}).status == 400);
  CHECK(c.get("/sessions/" + pid + "/export").body["graph"] == "pappus");
}

TEST_CASE("Heawood (0,3) MCAP gives Hea(9,9,9,8)") {
  Client c;
  std::string id = c.post("/sessions", {{"catalog", "heawood"}}).body["id"];
  auto m = c.get("/sessions/" + id + "/mcaps", {{"c0", "0"}, {"c1", "3"}});
  json best;
  for (auto& x : m.body["mcaps"])
    if (x["k"] == 5) best = x;
  REQUIRE_FALSE(best.is_null());
  auto r = c.post("/sessions/" + id + "/swap", {{"path", best["path"]}, {"colors", best["colors"]}});
  CHECK(r.body["listing"]["summary"] == "Hea(9,9,9,8)");
}

TEST_CASE("error mapping") {
  Client c;
  CHECK(c.get("/nowhere").status == 404);
  CHECK(c.get("/sessions/s99").status == 404);
  CHECK(c.post("/sessions", {{"catalog", "unknown"}}).status == 404);
  CHECK(c.post("/sessions", json::object()).status == 400);
  CHECK(c.svc.handle("POST", "/sessions", {}, "{not json").status == 400);
  json bad = coloring_to_json(catalog_coloring(catalog("q3")));
  bad["edge_colors"][0] = bad["vertex_colors"][0];
  auto r = c.post("/sessions", {{"coloring", bad}});
  CHECK(r.status == 422);
  std::string id = c.post("/sessions", {{"catalog", "q3"}}).body["id"];
  CHECK(c.get("/sessions/" + id + "/mcaps", {{"c0", "1"}}).status == 400);
  CHECK(c.get("/sessions/" + id + "/mcaps", {{"c0", "x"}, {"c1", "2"}}).status == 400);
  CHECK(c.post("/sessions/" + id + "/swap", json::object()).status == 400);
  CHECK(c.post("/sessions/" + id + "/swap", {{"path", {"v0", "e0", "v1", "e9", "v2"}}, {"colors", {0, 1}}}).status ==
        409);
  CHECK(c.get("/catalog").body["entries"].size() >= 19);
}

TEST_CASE("sessions persist and reload") {
  auto dir = std::filesystem::temp_directory_path() / "stc_session_test";
  std::filesystem::remove_all(dir);
  std::string id;
  json listing_after;
  {
    Client c(std::make_shared<SessionStore>(dir));
    id = c.post("/sessions", {{"catalog", "q3"}}).body["id"];
    auto m = c.get("/sessions/" + id + "/mcaps").body["mcaps"][0];
    listing_after = c.post("/sessions/" + id + "/swap", {{"path", m["path"]}, {"colors", m["colors"]}}).body["listing"];
  }
  Client again(std::make_shared<SessionStore>(dir));
  auto s = again.get("/sessions/" + id);
  REQUIRE(s.status == 200);
  CHECK(s.body["listing"] == listing_after);
  CHECK(s.body["steps"] == 1);
  auto fresh = again.post("/sessions", {{"catalog", "q3"}});
  CHECK(fresh.body["id"] != id);
  std::filesystem::remove_all(dir);
}

TEST_CASE("CLI and HTTP share one JSON body") {
  Coloring mu = catalog_coloring(catalog("q3"));
  Client c;
  std::string id = c.post("/sessions", {{"catalog", "q3"}}).body["id"];
  CHECK(dump(c.get("/sessions/" + id + "/mcaps").body) == dump(op_mcaps(mu)));
}
