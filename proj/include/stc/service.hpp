#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "stc/io.hpp"
#include "stc/session.hpp"

namespace stc {

// JSON bodies shared by the CLI (--json) and the HTTP routes.
json op_catalog();
json op_view(const Coloring& mu, const std::string& label);
json op_mcaps(const Coloring& mu, std::optional<std::pair<int, int>> filter = {});
json op_step(const ReductionStep& step, const Coloring& after, const std::string& label);
std::string label_for(const Graph& g);

struct Response {
  Response(int status = 200, json body = nullptr, std::string text = {}, std::string content_type = "application/json")
      : status(status), body(std::move(body)), text(std::move(text)), content_type(std::move(content_type)) {}
  int status;
  json body;
  std::string text;  // non-JSON payloads (DOT export)
  std::string content_type;
};

class Service {
 public:
  explicit Service(std::shared_ptr<SessionStore> store);

  Response handle(const std::string& method, const std::string& path,
                  const std::map<std::string, std::string>& query, const std::string& body);

 private:
  std::shared_ptr<SessionStore> store_;
};

// Blocks; serves the API and, if static_dir is set, files from it.
int run_server(Service& service, const std::string& host, int port, const std::string& static_dir);

}  // namespace stc
