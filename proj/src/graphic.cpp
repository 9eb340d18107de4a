#include "logder/graphic.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <set>

#include "logder/derlog.hpp"
#include "logder/error.hpp"

namespace logder {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : edges) {
    if (i == j) throw Error(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(i));
    if (i < 1 || j < 1 || i > n || j > n) {
      throw Error(ErrorKind::InvalidArgument, "vertex outside 1.." + std::to_string(n));
    }
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second) {
      throw Error(ErrorKind::InvalidArgument, "repeated edge " + std::to_string(i) + "-" + std::to_string(j));
    }
  }
  edges_.assign(seen.begin(), seen.end());
}

std::size_t Graph::degree(int v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const auto& e) { return e.first == v || e.second == v; }));
}

std::size_t Graph::min_degree() const {
  std::size_t best = n_ == 0 ? 0 : edges_.size() * 2;
  for (int v = 1; v <= n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_) + 1);
  for (const auto& [i, j] : edges_) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

std::string Graph::to_string() const {
  std::string out;
  for (const auto& [i, j] : edges_) {
    if (!out.empty()) out += ',';
    out += std::to_string(i) + "-" + std::to_string(j);
  }
  return out;
}

Graph parse_edge_list(std::string_view text, int n) {
  std::vector<std::pair<int, int>> edges;
  std::size_t pos = 0;
  auto number = [&](std::size_t& p) {
    while (p < text.size() && text[p] == ' ') ++p;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + p, text.data() + text.size(), v);
    if (ec != std::errc()) throw Error(ErrorKind::ParseError, "expected a vertex at position " + std::to_string(p));
    p = static_cast<std::size_t>(ptr - text.data());
    while (p < text.size() && text[p] == ' ') ++p;
    return v;
  };
  int largest = 0;
  while (pos < text.size()) {
    const int i = number(pos);
    if (pos >= text.size() || text[pos] != '-') {
      throw Error(ErrorKind::ParseError, "expected '-' at position " + std::to_string(pos));
    }
    ++pos;
    const int j = number(pos);
    edges.emplace_back(i, j);
    largest = std::max({largest, i, j});
    if (pos < text.size()) {
      if (text[pos] != ',') throw Error(ErrorKind::ParseError, "expected ',' at position " + std::to_string(pos));
      ++pos;
    }
  }
  if (edges.empty()) throw Error(ErrorKind::ParseError, "empty edge list");
  return Graph(n > 0 ? n : largest, std::move(edges));
}

Arrangement graphic_arrangement(const Graph& g) {
  if (g.edges().empty()) throw Error(ErrorKind::EmptyGraph, "graph has no edges");
  std::vector<LinearForm> forms;
  for (const auto& [i, j] : g.edges()) {
    Vector c(static_cast<std::size_t>(g.n()));
    c[static_cast<std::size_t>(i - 1)] = Scalar(1);
    c[static_cast<std::size_t>(j - 1)] = Scalar(-1);
    forms.emplace_back(std::move(c));
  }
  return Arrangement(std::move(forms));
}

std::vector<std::vector<int>> components(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::vector<int>> out;
  for (int v = 1; v <= g.n(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> comp, stack{v};
    seen[static_cast<std::size_t>(v)] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> articulation_vertices(const Graph& g) {
  const auto adj = g.adjacency();
  const std::size_t n = adj.size();
  std::vector<int> disc(n, 0), low(n, 0);
  std::vector<bool> cut(n, false);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = ++timer;
    int children = 0;
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (w == parent) continue;
      if (disc[static_cast<std::size_t>(w)] != 0) {
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
        continue;
      }
      ++children;
      dfs(w, u);
      low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
      if (parent != 0 && low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(u)]) {
        cut[static_cast<std::size_t>(u)] = true;
      }
    }
    if (parent == 0 && children > 1) cut[static_cast<std::size_t>(u)] = true;
  };
  for (int v = 1; v <= g.n(); ++v) {
    if (disc[static_cast<std::size_t>(v)] == 0) dfs(v, 0);
  }
  std::vector<int> out;
  for (int v = 1; v <= g.n(); ++v) {
    if (cut[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

namespace {

/// Graph without isolated vertices plus the map new vertex -> old vertex.
std::pair<Graph, std::vector<int>> compact(const Graph& g) {
  std::vector<int> old_of{0}, new_of(static_cast<std::size_t>(g.n()) + 1, 0);
  for (int v = 1; v <= g.n(); ++v) {
    if (g.degree(v) > 0) {
      old_of.push_back(v);
      new_of[static_cast<std::size_t>(v)] = static_cast<int>(old_of.size()) - 1;
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [i, j] : g.edges()) {
    edges.emplace_back(new_of[static_cast<std::size_t>(i)], new_of[static_cast<std::size_t>(j)]);
  }
  return {Graph(static_cast<int>(old_of.size()) - 1, std::move(edges)), std::move(old_of)};
}

}  // namespace

Graph drop_isolated(const Graph& g) { return compact(g).first; }

bool squares_derivation_check(const Graph& g) {
  const Arrangement a = graphic_arrangement(g);
  const int n = g.n();
  std::vector<HomPoly> comps;
  for (int i = 0; i < n; ++i) comps.push_back(pow(HomPoly::variable(n, i), 2));
  const Derivation theta(std::move(comps));
  return is_logarithmic(a, theta) && !is_euler_multiple(theta);
}

std::string_view to_string(GraphReason r) {
  switch (r) {
    case GraphReason::Disconnected: return "disconnected";
    case GraphReason::Articulated: return "articulated";
    case GraphReason::Neither: return "neither";
  }
  return "?";
}

std::string GraphMdr::description() const {
  std::string out = "r(G) = " + std::to_string(r);
  if (reason == GraphReason::Disconnected) {
    out += " (disconnected, " + std::to_string(components.size()) + " components)";
  } else if (reason == GraphReason::Articulated) {
    out += " (articulated at " + std::to_string(*articulation) + ")";
  }
  return out;
}

GraphMdr mdr_graph(const Graph& g) {
  if (g.edges().size() < 2) throw Error(ErrorKind::TooFewEdges, "the graph needs at least two edges");
  const auto [h, old_of] = compact(g);
  GraphMdr out;
  for (int v = 1; v <= g.n(); ++v) {
    if (g.degree(v) == 0) out.dropped.push_back(v);
  }
  for (auto comp : components(h)) {
    for (int& v : comp) v = old_of[static_cast<std::size_t>(v)];
    out.components.push_back(std::move(comp));
  }
  if (out.components.size() > 1) {
    out.r = 1;
    out.reason = GraphReason::Disconnected;
    return out;
  }
  const auto cut = articulation_vertices(h);
  if (!cut.empty()) {
    out.r = 1;
    out.reason = GraphReason::Articulated;
    out.articulation = old_of[static_cast<std::size_t>(cut.front())];
    return out;
  }
  out.r = 2;
  return out;
}

std::vector<Graph> enumerate_graphs(int n) {
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
  }
  std::vector<Graph> out;
  const std::size_t m = all.size();
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (1UL << k)) edges.push_back(all[k]);
    }
    Graph g(n, std::move(edges));
    if (g.min_degree() >= 1) out.push_back(std::move(g));
  }
  return out;
}

Graph delete_edge(const Graph& g, std::size_t k) {
  if (k >= g.edges().size()) throw Error(ErrorKind::NotMember, "edge index out of range");
  auto edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(k));
  return Graph(g.n(), std::move(edges));
}

Graph contract_edge(const Graph& g, std::size_t k) {
  if (k >= g.edges().size()) throw Error(ErrorKind::NotMember, "edge index out of range");
  const auto [a, b] = g.edges()[k];
  // b merges into a; vertices above b shift down by one.
  auto relabel = [a = a, b = b](int v) { return v == b ? a : (v > b ? v - 1 : v); };
  std::set<std::pair<int, int>> edges;
  for (const auto& [i, j] : g.edges()) {
    int u = relabel(i), w = relabel(j);
    if (u == w) continue;
    if (u > w) std::swap(u, w);
    edges.insert({u, w});
  }
  return Graph(g.n() - 1, {edges.begin(), edges.end()});
}

}  // namespace logder
