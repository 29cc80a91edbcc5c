#include "stc/coloring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "stc/error.hpp"

namespace stc {

Coloring::Coloring(GraphPtr g, std::vector<int> vertex_colors, std::vector<int> edge_colors)
    : graph_(std::move(g)), vc_(std::move(vertex_colors)), ec_(std::move(edge_colors)) {
  if (!graph_) fail(ErrorKind::InvalidArgument, "coloring without a graph");
  if (static_cast<int>(vc_.size()) != graph_->n())
    fail(ErrorKind::InvalidColoring, "expected " + std::to_string(graph_->n()) + " vertex colors, got " +
                                         std::to_string(vc_.size()));
  if (static_cast<int>(ec_.size()) != graph_->m())
    fail(ErrorKind::InvalidColoring, "expected " + std::to_string(graph_->m()) + " edge colors, got " +
                                         std::to_string(ec_.size()));
  const int p = palette();
  for (size_t i = 0; i < vc_.size(); ++i)
    if (vc_[i] < 0 || vc_[i] >= p)
      fail(ErrorKind::InvalidColoring, "vertex " + std::to_string(i) + " color " + std::to_string(vc_[i]) +
                                           " outside 0.." + std::to_string(p - 1));
  for (size_t i = 0; i < ec_.size(); ++i)
    if (ec_[i] < 0 || ec_[i] >= p)
      fail(ErrorKind::InvalidColoring, "edge " + std::to_string(i) + " color " + std::to_string(ec_[i]) +
                                           " outside 0.." + std::to_string(p - 1));
}

void Coloring::set_vertex_color(int v, int c) {
  if (c < 0 || c >= palette()) fail(ErrorKind::InvalidColoring, "color out of range");
  vc_.at(v) = c;
}

void Coloring::set_edge_color(int e, int c) {
  if (c < 0 || c >= palette()) fail(ErrorKind::InvalidColoring, "color out of range");
  ec_.at(e) = c;
}

std::uint64_t Coloring::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](int x) {
    h ^= static_cast<std::uint64_t>(x + 1);
    h *= 1099511628211ull;
  };
  for (int c : vc_) mix(c);
  mix(-2);
  for (int c : ec_) mix(c);
  return h;
}

ValidationReport validate(const Coloring& mu) {
  const Graph& g = mu.graph();
  ValidationReport r;
  for (int v = 0; v < g.n(); ++v) {
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      int ci = mu.edge_color(nb[i].edge);
      if (ci == mu.vertex_color(v)) {
        r.vertex_incidence = false;
        r.violations.push_back({ViolationKind::VertexEdge, ElementRef::vertex(v), ElementRef::edge(nb[i].edge), ci});
      }
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (mu.edge_color(nb[j].edge) == ci) {
          r.proper_edges = false;
          r.violations.push_back(
              {ViolationKind::EdgeEdge, ElementRef::edge(nb[i].edge), ElementRef::edge(nb[j].edge), ci});
        }
    }
  }
  for (const auto& e : g.edges())
    if (mu.vertex_color(e.u) == mu.vertex_color(e.v)) {
      r.vertex_adjacency = false;
      r.violations.push_back(
          {ViolationKind::VertexVertex, ElementRef::vertex(e.u), ElementRef::vertex(e.v), mu.vertex_color(e.u)});
    }
  return r;
}

bool is_stc(const Coloring& mu) {
  const Graph& g = mu.graph();
  std::vector<int> seen(mu.palette(), -1);
  for (int v = 0; v < g.n(); ++v) {
    seen[mu.vertex_color(v)] = v;
    for (auto [w, e] : g.neighbors(v)) {
      int c = mu.edge_color(e);
      if (seen[c] == v) return false;
      seen[c] = v;
    }
  }
  return true;
}

bool is_tc(const Coloring& mu) { return is_stc(mu) && beta(mu) == 0; }

void require_stc(const Coloring& mu, const std::string& context) {
  if (is_stc(mu)) return;
  auto r = validate(mu);
  std::string detail;
  for (auto& v : r.violations) {
    if (v.kind == ViolationKind::VertexVertex) continue;
    detail = v.a.str() + " and " + v.b.str() + " share color " + std::to_string(v.color);
    break;
  }
  fail(ErrorKind::InvalidColoring, context + ": not a semi-total coloring (" + detail + ")");
}

std::vector<int> beta_edges(const Coloring& mu) {
  std::vector<int> out;
  const auto& es = mu.graph().edges();
  for (int i = 0; i < static_cast<int>(es.size()); ++i)
    if (mu.vertex_color(es[i].u) == mu.vertex_color(es[i].v)) out.push_back(i);
  return out;
}

int beta(const Coloring& mu) {
  int b = 0;
  for (const auto& e : mu.graph().edges()) b += mu.vertex_color(e.u) == mu.vertex_color(e.v);
  return b;
}

ClassListing listing(const Coloring& mu) {
  const int p = mu.palette();
  ClassListing l;
  l.vertex_count.assign(p, 0);
  l.edge_count.assign(p, 0);
  l.total.assign(p, 0);
  for (int c : mu.vertex_colors()) ++l.vertex_count[c];
  for (int c : mu.edge_colors()) ++l.edge_count[c];
  for (int c = 0; c < p; ++c) {
    l.total[c] = l.vertex_count[c] + l.edge_count[c];
    if (l.vertex_count[c] == 0) l.lacunar_colors.push_back(c);
  }
  auto [mn, mx] = std::minmax_element(l.total.begin(), l.total.end());
  l.gamma = *mx - *mn;
  l.beta = beta(mu);
  l.is_stc = is_stc(mu);
  l.is_tc = l.is_stc && l.beta == 0;
  l.is_equitable = l.gamma <= 1;
  return l;
}

int gamma(const Coloring& mu) { return listing(mu).gamma; }

std::string listing_tuple(const ClassListing& l, const std::string& name) {
  std::string s = name + "(";
  for (size_t i = 0; i < l.total.size(); ++i) s += (i ? "," : "") + std::to_string(l.total[i]);
  return s + ")";
}

std::string listing_compressed(const ClassListing& l, const std::string& name) {
  std::string s = name + "(";
  for (size_t i = 0; i < l.total.size();) {
    size_t j = i;
    while (j < l.total.size() && l.total[j] == l.total[i]) ++j;
    if (i) s += ",";
    s += std::to_string(l.total[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s + ")";
}

std::string format_listing(const ClassListing& l, const std::string& name) {
  std::ostringstream os;
  for (size_t c = 0; c < l.total.size(); ++c)
    os << c << "(" << l.vertex_count[c] << "+" << l.edge_count[c] << "=" << l.total[c] << ")\n";
  auto full = listing_tuple(l, name), comp = listing_compressed(l, name);
  os << full;
  if (comp != full) os << "=" << comp;
  os << "\n";
  return os.str();
}

namespace {

struct PatternParser {
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::InvalidArgument, "pattern parse error at " + std::to_string(i) + ": " + what);
  }
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_digit() const { return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); }
  int number() {
    if (!at_digit()) error("expected a number");
    int x = 0;
    while (at_digit()) x = x * 10 + (s[i++] - '0');
    return x;
  }
  // a token or group must be followed by whitespace, ')' or the end
  void separator() {
    if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ')' && s[i] != '(')
      error("tokens must be separated by whitespace");
  }
  std::vector<PatternToken> sequence(bool nested) {
    std::vector<PatternToken> out;
    for (;;) {
      skip();
      if (i == s.size()) {
        if (nested) error("unbalanced '('");
        return out;
      }
      if (s[i] == ')') {
        if (!nested) error("unbalanced ')'");
        ++i;
        return out;
      }
      if (s[i] == '(') {
        ++i;
        auto inner = sequence(true);
        int k = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          if (i < s.size() && s[i] == '{') {
            ++i;
            k = number();
            if (i >= s.size() || s[i] != '}') error("expected '}'");
            ++i;
          } else {
            k = number();
          }
        }
        separator();
        for (int r = 0; r < k; ++r) out.insert(out.end(), inner.begin(), inner.end());
        continue;
      }
      int v = number();
      if (i >= s.size() || s[i] != '_') error("expected '_'");
      ++i;
      int e = number();
      separator();
      out.push_back({v, e});
    }
  }
};

}  // namespace

std::vector<PatternToken> parse_pattern(const std::string& text) {
  PatternParser p{text};
  return p.sequence(false);
}

Coloring apply_pattern(GraphPtr g, const HamiltonDecomposition& h, const std::vector<PatternToken>& pattern,
                       std::optional<int> chord_color) {
  const int n = g->n();
  if (static_cast<int>(pattern.size()) != n)
    fail(ErrorKind::InvalidArgument, "pattern has " + std::to_string(pattern.size()) + " tokens, cycle has " +
                                         std::to_string(n) + " vertices");
  if (static_cast<int>(h.cycle.size()) != n) fail(ErrorKind::InvalidArgument, "Hamilton cycle does not match graph");
  const int cc = chord_color.value_or(g->max_degree());
  std::vector<int> vc(n), ec(g->m(), cc);
  for (int p = 0; p < n; ++p) {
    vc[h.cycle[p]] = pattern[p].vertex;
    ec[h.cycle_edges[p]] = pattern[p].edge;
  }
  Coloring mu(std::move(g), std::move(vc), std::move(ec));
  require_stc(mu, "apply_pattern");
  return mu;
}

Coloring apply_pattern(GraphPtr g, const HamiltonDecomposition& h, const std::string& pattern,
                       std::optional<int> chord_color) {
  return apply_pattern(std::move(g), h, parse_pattern(pattern), chord_color);
}

Coloring default_lacunar_stc(GraphPtr g, const HamiltonDecomposition& h) {
  if (!g->is_regular() || g->max_degree() != 3) fail(ErrorKind::Unsupported, "default_lacunar_stc needs a cubic graph");
  const int n = g->n();
  const int len = 2 * n;
  std::vector<int> colors(len);
  for (int i = 0; i < len; ++i) colors[i] = i % 3;
  auto build = [&](const std::vector<int>& seq) {
    std::vector<int> vc(n), ec(g->m(), 3);
    for (int p = 0; p < n; ++p) {
      vc[h.cycle[p]] = seq[2 * p];
      ec[h.cycle_edges[p]] = seq[2 * p + 1];
    }
    return Coloring(g, std::move(vc), std::move(ec));
  };
  Coloring base = build(colors);
  if (len % 3 == 0) return base;
  // smallest window touching the seam (positions len-1 | 0), then leftmost start, then lex colors
  for (int size = 1; size <= 4; ++size) {
    for (int start = -size; start <= 0; ++start) {
      std::vector<int> pos;
      for (int k = 0; k < size; ++k) pos.push_back(((start + k) % len + len) % len);
      std::vector<int> cand(size, 0);
      for (;;) {
        auto seq = colors;
        for (int k = 0; k < size; ++k) seq[pos[k]] = cand[k];
        Coloring mu = build(seq);
        if (is_stc(mu)) return mu;
        int k = size - 1;
        while (k >= 0 && cand[k] == 2) cand[k--] = 0;
        if (k < 0) break;
        ++cand[k];
      }
    }
  }
  fail(ErrorKind::InvalidColoring, "default_lacunar_stc: no seam repair of at most 4 elements");
}

Coloring construct_stc(GraphPtr g, const std::vector<int>& precolored_edges) {
  const int m = g->m();
  const int p = g->max_degree() + 1;
  std::vector<int> ec(m, -1);
  if (!precolored_edges.empty()) {
    if (static_cast<int>(precolored_edges.size()) != m) fail(ErrorKind::InvalidArgument, "precolored edge list size");
    ec = precolored_edges;
  }
  // BFS edge order keeps constraints local
  std::vector<int> order;
  std::vector<char> placed(m, 0), seenv(g->n(), 0);
  for (int s = 0; s < g->n(); ++s) {
    if (seenv[s]) continue;
    std::vector<int> q{s};
    seenv[s] = 1;
    for (size_t i = 0; i < q.size(); ++i)
      for (auto [w, e] : g->neighbors(q[i])) {
        if (!placed[e]) {
          placed[e] = 1;
          if (ec[e] < 0) order.push_back(e);
        }
        if (!seenv[w]) {
          seenv[w] = 1;
          q.push_back(w);
        }
      }
  }
  auto ok = [&](int e, int c) {
    for (int x : {g->edge(e).u, g->edge(e).v})
      for (auto [w, f] : g->neighbors(x))
        if (f != e && ec[f] == c) return false;
    return true;
  };
  for (int e = 0; e < m; ++e)
    if (ec[e] >= 0 && (ec[e] >= p || !ok(e, ec[e]))) fail(ErrorKind::InvalidColoring, "precolored edges conflict");
  std::int64_t steps = 0;
  size_t k = 0;
  std::vector<int> next(order.size(), 0);
  while (k < order.size()) {
    if (++steps > 50'000'000) fail(ErrorKind::InvalidColoring, "construct_stc: search budget exhausted");
    int e = order[k];
    ec[e] = -1;
    int c = next[k];
    while (c < p && !ok(e, c)) ++c;
    if (c < p) {
      ec[e] = c;
      next[k] = c + 1;
      ++k;
      if (k < order.size()) next[k] = 0;
    } else {
      if (k == 0) fail(ErrorKind::InvalidColoring, "construct_stc: no proper edge coloring with Δ+1 colors");
      next[k] = 0;
      --k;
    }
  }
  std::vector<int> vc(g->n());
  for (int v = 0; v < g->n(); ++v) {
    std::vector<char> used(p, 0);
    for (auto [w, e] : g->neighbors(v)) used[ec[e]] = 1;
    int c = 0;
    while (used[c]) ++c;
    vc[v] = c;
  }
  return Coloring(std::move(g), std::move(vc), std::move(ec));
}

}  // namespace stc
