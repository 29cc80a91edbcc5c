#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stc {

struct Edge {
  int u;
  int v;
  int other(int x) const { return x == u ? v : u; }
};

struct Incidence {
  int vertex;
  int edge;
};

// Simple undirected graph. Edges are stored sorted (u<v, lexicographic);
// the position in that list is the canonical edge index used everywhere.
class Graph {
 public:
  Graph() = default;

  // Rejects loops, duplicates and out-of-range endpoints.
  static Graph build(int n, const std::vector<std::pair<int, int>>& edges, std::string name = {});

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  int elements() const { return n_ + m(); }
  const std::string& name() const { return name_; }
  Graph renamed(std::string name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }
  const std::vector<Incidence>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const { return max_degree_; }
  std::optional<int> edge_between(int u, int v) const;

  bool is_regular() const;
  bool is_connected() const;
  bool is_bipartite() const;
  std::optional<int> girth() const;  // nullopt for forests

  bool same_edges(const Graph& other) const { return n_ == other.n_ && edge_pairs() == other.edge_pairs(); }
  std::vector<std::pair<int, int>> edge_pairs() const;

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::string name_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

struct ElementRef {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  int index = 0;

  static ElementRef vertex(int i) { return {Kind::Vertex, i}; }
  static ElementRef edge(int i) { return {Kind::Edge, i}; }
  bool is_vertex() const { return kind == Kind::Vertex; }
  std::string str() const;  // "v3" / "e12"
  static ElementRef parse(const std::string& s);
  bool operator==(const ElementRef&) const = default;
};

struct HamiltonDecomposition {
  std::vector<int> cycle;        // cyclic vertex order
  std::vector<int> cycle_edges;  // cycle_edges[i] joins cycle[i] and cycle[i+1 mod n]
  std::vector<int> chords;       // remaining edge indices, sorted
};

HamiltonDecomposition verify_hamilton(const Graph& g, const std::vector<int>& cycle);

struct Component {
  Graph graph;
  std::vector<int> vertex_map;  // local vertex -> vertex of the parent graph
};

// Components of the spanning subgraph on edge_subset; isolated vertices dropped.
std::vector<Component> subgraph_components(const Graph& g, const std::vector<int>& edge_subset);

// Naive backtracking isomorphism (n <= 60). Returns a map a-vertex -> b-vertex.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

// DFS for a Hamilton cycle, bounded by a node budget.
std::optional<std::vector<int>> find_hamilton_cycle(const Graph& g, std::int64_t budget = 10'000'000);

}  // namespace stc
