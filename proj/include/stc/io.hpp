#pragma once

#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "stc/codes.hpp"
#include "stc/coloring.hpp"
#include "stc/covering.hpp"
#include "stc/families.hpp"
#include "stc/kempe.hpp"
#include "stc/oracle.hpp"

namespace stc {

using json = nlohmann::json;
using GraphResolver = std::function<GraphPtr(const std::string&)>;

// Canonical text form shared by the CLI and the HTTP service.
std::string dump(const json& j);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Catalog lookup by key; the default resolver for names inside JSON documents.
GraphPtr catalog_graph(const std::string& key);
GraphResolver catalog_resolver();
// A graph reference: a name, or an inline Graph JSON object.
GraphPtr resolve_graph(const json& ref, const GraphResolver& resolve = catalog_resolver());

json coloring_to_json(const Coloring& mu);
Coloring coloring_from_json(const json& j, const GraphResolver& resolve = catalog_resolver());

json listing_to_json(const ClassListing& l, const std::string& label = {});
json validation_to_json(const ValidationReport& r);
json mcap_to_json(const Mcap& m);
Mcap mcap_from_json(const json& j);
json step_to_json(const ReductionStep& s);
ReductionStep step_from_json(const json& j);

struct TraceDocument {
  Coloring initial;
  std::vector<ReductionStep> steps;
};

json trace_to_json(const ReductionTrace& t);
json steps_to_json(const Coloring& initial, const std::vector<ReductionStep>& steps);
// "initial" may be a coloring object or "catalog_pattern" (pattern coloring of the catalog entry).
TraceDocument trace_from_json(const json& j, const GraphResolver& resolve = catalog_resolver());

json covering_to_json(const CoveringMap& cm);
CoveringMap covering_from_json(const json& j, const GraphResolver& resolve = catalog_resolver());
json code_report_to_json(const CodeReport& r);
json oracle_to_json(const OracleResult& r);

// Starting coloring of a catalog entry: its pattern, its stored coloring,
// default_lacunar_stc for hamiltonian cubic graphs, else construct_stc.
Coloring catalog_coloring(const CatalogEntry& e);

struct DotOptions {
  std::optional<HamiltonDecomposition> circular;  // place the cycle on a circle
};

std::string color_name(int c);
std::string color_hex(int c);
std::string to_dot(const Coloring& mu, const DotOptions& opts = {});
std::string to_dot(const Graph& g, const DotOptions& opts = {});

}  // namespace stc
