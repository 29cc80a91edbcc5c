#include "stc/families.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "stc/error.hpp"

namespace stc {

namespace {

std::string normalize_lcf(std::string_view text) {
  std::string s;
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char c = text[i];
    // U+2212 MINUS SIGN
    if (c == 0xE2 && i + 2 < text.size() && (unsigned char)text[i + 1] == 0x88 && (unsigned char)text[i + 2] == 0x92) {
      s.push_back('-');
      i += 2;
    } else if (!std::isspace(c) && c != '{' && c != '}') {
      s.push_back(static_cast<char>(c));
    }
  }
  // optional enclosing parentheses: ([...]^k)
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')' && s[1] == '[') s = s.substr(1, s.size() - 2);
  return s;
}

struct Cursor {
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::InvalidArgument, "LCF parse error at " + std::to_string(i) + ": " + what + " in '" + s + "'");
  }
  bool eat(char c) {
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }
  int integer() {
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) error("expected integer");
    return std::stoi(s.substr(start, i - start));
  }
};

std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

}  // namespace

LcfNotation parse_lcf(std::string_view text) {
  const std::string s = normalize_lcf(text);
  Cursor c{s};
  LcfNotation out;
  c.expect('[');
  if (c.i < s.size() && s[c.i] == '(') {
    out.extended = true;
    do {
      c.expect('(');
      std::vector<int> g;
      do g.push_back(c.integer());
      while (c.eat(','));
      c.expect(')');
      out.groups.push_back(std::move(g));
    } while (c.eat(','));
  } else {
    do out.groups.push_back({c.integer()});
    while (c.eat(','));
  }
  c.expect(']');
  if (c.eat('^')) out.exponent = c.integer();
  if (c.i != s.size()) c.error("trailing characters");
  if (out.exponent < 1) fail(ErrorKind::InvalidArgument, "LCF exponent must be positive");
  return out;
}

HamiltonianGraph from_lcf(const LcfNotation& lcf, int n, std::string name) {
  for (auto& g : lcf.groups)
    if (g.size() != 1) fail(ErrorKind::InvalidArgument, "plain LCF needs one offset per position");
  const int positions = lcf.positions();
  if (n == 0) n = positions;
  if (n != positions)
    fail(ErrorKind::InvalidArgument, "LCF has " + std::to_string(positions) + " positions but n=" + std::to_string(n));
  if (n < 4) fail(ErrorKind::InvalidArgument, "LCF graph needs at least 4 vertices");
  const int len = static_cast<int>(lcf.groups.size());
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.insert(ordered(i, (i + 1) % n));
  std::set<std::pair<int, int>> chords;
  for (int i = 0; i < n; ++i) {
    int o = lcf.groups[i % len][0];
    if (mod(o, n) == 0) fail(ErrorKind::InvalidArgument, "LCF offset " + std::to_string(o) + " is 0 mod n");
    int j = mod(i + static_cast<long long>(o), n);
    auto e = ordered(i, j);
    if (edges.count(e)) fail(ErrorKind::InvalidArgument, "LCF chord " + std::to_string(i) + "-" + std::to_string(j) +
                                                               " duplicates a cycle edge");
    int back = lcf.groups[j % len][0];
    if (mod(j + static_cast<long long>(back), n) != i)
      fail(ErrorKind::InvalidArgument, "LCF offsets at positions " + std::to_string(i) + " and " + std::to_string(j) +
                                           " disagree (multi-edge / degree > 3)");
    chords.insert(e);
  }
  edges.insert(chords.begin(), chords.end());
  HamiltonianGraph out{Graph::build(n, {edges.begin(), edges.end()}, std::move(name)), std::nullopt};
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i;
  out.hamilton = verify_hamilton(out.graph, cyc);
  return out;
}

ExtendedLcfGraph from_extended_lcf(const LcfNotation& lcf, int n, std::optional<int> expected_degree,
                                   std::optional<int> expected_girth, std::string name) {
  if (n < 4) fail(ErrorKind::InvalidArgument, "LCF graph needs at least 4 vertices");
  if (lcf.groups.empty()) fail(ErrorKind::InvalidArgument, "empty LCF");
  const int len = static_cast<int>(lcf.groups.size());
  std::set<std::pair<int, int>> cycle, chords;
  for (int i = 0; i < n; ++i) cycle.insert(ordered(i, (i + 1) % n));
  for (int i = 0; i < n; ++i) {
    for (int o : lcf.groups[i % len]) {
      if (mod(o, n) == 0) fail(ErrorKind::InvalidArgument, "LCF offset " + std::to_string(o) + " is 0 mod n");
      int j = mod(i + static_cast<long long>(o), n);
      auto e = ordered(i, j);
      if (cycle.count(e)) fail(ErrorKind::InvalidArgument, "LCF chord " + std::to_string(i) + "-" + std::to_string(j) +
                                                                " duplicates a cycle edge");
      chords.insert(e);
    }
  }
  std::vector<std::pair<int, int>> edges(cycle.begin(), cycle.end());
  edges.insert(edges.end(), chords.begin(), chords.end());
  Graph g = Graph::build(n, edges, std::move(name));
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i;
  ExtendedLcfGraph out{g, verify_hamilton(g, cyc), {}};
  auto& v = out.validation;
  v.min_degree = g.n() ? g.degree(0) : 0;
  for (int x = 0; x < g.n(); ++x) v.min_degree = std::min(v.min_degree, g.degree(x));
  v.max_degree = g.max_degree();
  v.regular = g.is_regular();
  v.girth = g.girth();
  v.expected_degree = expected_degree;
  v.expected_girth = expected_girth;
  v.ok = v.regular;
  if (!v.regular) v.detail += "not regular (degrees " + std::to_string(v.min_degree) + ".." +
                              std::to_string(v.max_degree) + "); ";
  if (expected_degree && (!v.regular || v.max_degree != *expected_degree)) {
    v.ok = false;
    v.detail += "expected " + std::to_string(*expected_degree) + "-regular; ";
  }
  if (expected_girth && v.girth != expected_girth) {
    v.ok = false;
    v.detail += "expected girth " + std::to_string(*expected_girth) + ", got " +
                (v.girth ? std::to_string(*v.girth) : std::string("infinity")) + "; ";
  }
  if (v.ok) v.detail = "ok";
  return out;
}

Graph cycle_graph(int n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::build(n, e, "C" + std::to_string(n));
}

Graph complete_graph(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::build(n, e, "K" + std::to_string(n));
}

Graph haar(std::int64_t N) {
  if (N <= 0) fail(ErrorKind::InvalidArgument, "Haar number must be positive");
  int n = 0;
  for (auto x = N; x > 0; x >>= 1) ++n;
  std::vector<int> B;
  for (int t = 0; t < n; ++t)
    if ((N >> (n - 1 - t)) & 1) B.push_back(t);  // b_0 is the most significant bit
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int t : B) e.emplace_back(i, n + (i + t) % n);
  return Graph::build(2 * n, e, "H(" + std::to_string(N) + ")");
}

Graph mobius_ladder(int r) {
  if (r < 2) fail(ErrorKind::InvalidArgument, "Mobius ladder needs r >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 2 * r; ++i) e.emplace_back(i, (i + 1) % (2 * r));
  for (int i = 0; i < r; ++i) e.emplace_back(i, i + r);
  return Graph::build(2 * r, e, "Mob" + std::to_string(r));
}

Graph fat_mobius(int r) {
  if (r < 3) fail(ErrorKind::InvalidArgument, "Fat-Mobius ladder needs r >= 3");
  if (r > 31) fail(ErrorKind::InvalidArgument, "Fat-Mobius ladder parameter too large");
  std::int64_t N = (std::int64_t{1} << (2 * r - 1)) + (std::int64_t{1} << (r - 1)) + 1;
  return haar(N).renamed("FMob" + std::to_string(r));
}

Graph fat_mobius_by_replacement(int r) {
  if (r < 3) fail(ErrorKind::InvalidArgument, "Fat-Mobius ladder needs r >= 3");
  const int n = 4 * r;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  // ladder vertex i splits into p(i)=2i, q(i)=2i+1; rung (i, r+i) becomes a crossing pair
  for (int i = 0; i < r; ++i) {
    e.emplace_back(2 * i, 2 * (r + i) + 1);
    e.emplace_back(2 * i + 1, 2 * (r + i));
  }
  return Graph::build(n, e, "FMob" + std::to_string(r));
}

HamiltonianGraph prism(int m) {
  if (m < 3) fail(ErrorKind::InvalidArgument, "prism needs m >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) {
    e.emplace_back(i, (i + 1) % m);
    e.emplace_back(m + i, m + (i + 1) % m);
    e.emplace_back(i, m + i);
  }
  HamiltonianGraph out{Graph::build(2 * m, e, "C" + std::to_string(m) + "xK2"), std::nullopt};
  std::vector<int> cyc;
  for (int i = 0; i < m; ++i) cyc.push_back(i);
  for (int i = m - 1; i >= 0; --i) cyc.push_back(m + i);
  out.hamilton = verify_hamilton(out.graph, cyc);
  return out;
}

Graph generalized_petersen(int m, int k) {
  if (m < 3 || k < 1 || 2 * k >= m) fail(ErrorKind::InvalidArgument, "GP(m,k) needs m >= 3 and 1 <= k < m/2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) {
    e.emplace_back(i, (i + 1) % m);
    e.emplace_back(m + i, m + (i + k) % m);
    e.emplace_back(i, m + i);
  }
  return Graph::build(2 * m, e, "GP(" + std::to_string(m) + "," + std::to_string(k) + ")");
}

Graph vertex_expand(const Graph& g, ExpandVariant variant) {
  if (g.n() == 0 || !g.is_regular() || g.max_degree() != 3) fail(ErrorKind::Unsupported, "vertex expansion needs a cubic graph");
  const bool tri = variant == ExpandVariant::K23WithOneTriangle;
  // block v: ports first (one per original edge, in neighbor order), then hubs
  std::vector<int> base(g.n());
  int next = 0;
  for (int v = 0; v < g.n(); ++v) {
    base[v] = next;
    next += (tri && v == 0) ? 3 : 5;
  }
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < g.n(); ++v) {
    int b = base[v];
    if (tri && v == 0) {
      e.emplace_back(b, b + 1);
      e.emplace_back(b, b + 2);
      e.emplace_back(b + 1, b + 2);
    } else {
      for (int p = 0; p < 3; ++p) {
        e.emplace_back(b + p, b + 3);
        e.emplace_back(b + p, b + 4);
      }
    }
  }
  auto port = [&](int v, int w) {
    const auto& nb = g.neighbors(v);
    for (int i = 0; i < 3; ++i)
      if (nb[i].vertex == w) return base[v] + i;
    return -1;
  };
  for (auto& ed : g.edges()) e.emplace_back(port(ed.u, ed.v), port(ed.v, ed.u));
  std::string suffix = tri ? "^{K23,K3}" : "^{K23}";
  return Graph::build(next, e, g.name() + suffix);
}

}  // namespace stc
