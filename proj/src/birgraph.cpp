#include "kurank2/birgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "kurank2/error.hpp"

namespace kurank2 {

std::string to_string(SPoint p) { return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")"; }

std::string to_string(EdgeRule r) {
  switch (r) {
    case EdgeRule::SameSum: return "SameSum";
    case EdgeRule::ShiftMinusTwo: return "ShiftMinusTwo";
    case EdgeRule::Special: return "Special";
  }
  return "?";
}

bool in_S(SPoint p) { return p.b >= 1 && p.a > p.b && p.sum() >= 6 && std::gcd(p.a, p.b) == 1; }

bool edge_valid(const BirEdge& e) {
  if (!in_S(e.x) || !in_S(e.y)) return false;
  switch (e.rule) {
    case EdgeRule::SameSum: return e.x < e.y && e.x.sum() == e.y.sum();
    case EdgeRule::ShiftMinusTwo: return e.x.b >= 3 && e.y == SPoint{e.x.a + 1, e.x.b - 2};
    case EdgeRule::Special: return e.x == SPoint{5, 4} && e.y == SPoint{7, 1};
  }
  return false;
}

namespace {

std::vector<SPoint> nodes_up_to(Int sum_bound) {
  std::vector<SPoint> out;
  for (Int s = 6; s <= sum_bound; ++s)
    for (Int b = 1; 2 * b < s; ++b) {
      SPoint p{s - b, b};
      if (in_S(p)) out.push_back(p);
    }
  std::sort(out.begin(), out.end(), [](SPoint x, SPoint y) {
    return x.sum() != y.sum() ? x.sum() < y.sum() : x.a < y.a;
  });
  return out;
}

bool edge_less(const BirEdge& e, const BirEdge& f) {
  if (e.x != f.x) return e.x < f.x;
  if (e.y != f.y) return e.y < f.y;
  return e.rule < f.rule;
}

void check_bound(Int sum_bound) {
  if (sum_bound < 6) fail(ErrorCode::BoundTooSmall, "sum bound must be at least 6");
}

}  // namespace

BirGraph build_graph(Int sum_bound) {
  check_bound(sum_bound);
  BirGraph g;
  g.sum_bound = sum_bound;
  g.nodes = nodes_up_to(sum_bound);
  std::map<Int, std::vector<SPoint>> levels;
  for (SPoint p : g.nodes) levels[p.sum()].push_back(p);
  for (const auto& [s, level] : levels)
    for (std::size_t i = 0; i < level.size(); ++i)
      for (std::size_t j = i + 1; j < level.size(); ++j)
        g.edges.push_back({std::min(level[i], level[j]), std::max(level[i], level[j]), EdgeRule::SameSum});
  for (SPoint p : g.nodes) {
    SPoint q{p.a + 1, p.b - 2};
    if (p.b >= 3 && in_S(q) && q.sum() <= sum_bound) g.edges.push_back({p, q, EdgeRule::ShiftMinusTwo});
  }
  if (sum_bound >= 9) g.edges.push_back({{5, 4}, {7, 1}, EdgeRule::Special});
  std::sort(g.edges.begin(), g.edges.end(), edge_less);
  return g;
}

std::vector<BirEdge> drawn_edges(const BirGraph& g) {
  std::vector<BirEdge> out;
  for (std::size_t i = 0; i + 1 < g.nodes.size(); ++i) {
    SPoint p = g.nodes[i], q = g.nodes[i + 1];
    if (p.sum() == q.sum()) out.push_back({std::min(p, q), std::max(p, q), EdgeRule::SameSum});
  }
  for (const BirEdge& e : g.edges)
    if (e.rule != EdgeRule::SameSum) out.push_back(e);
  std::sort(out.begin(), out.end(), edge_less);
  return out;
}

namespace {

struct Adjacency {
  std::map<SPoint, std::size_t> index;
  std::vector<std::vector<std::size_t>> edges_at;  // edge ids per node
};

Adjacency adjacency(const BirGraph& g) {
  Adjacency adj;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) adj.index.emplace(g.nodes[i], i);
  adj.edges_at.resize(g.nodes.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    adj.edges_at[adj.index.at(g.edges[e].x)].push_back(e);
    adj.edges_at[adj.index.at(g.edges[e].y)].push_back(e);
  }
  return adj;
}

// BFS parents: (node, edge) used to reach each node
std::vector<std::pair<std::size_t, std::size_t>> bfs(const BirGraph& g, const Adjacency& adj, std::size_t start) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::pair<std::size_t, std::size_t>> parent(g.nodes.size(), {none, none});
  parent[start] = {start, none};
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t e : adj.edges_at[u]) {
      const BirEdge& edge = g.edges[e];
      std::size_t w = adj.index.at(edge.x == g.nodes[u] ? edge.y : edge.x);
      if (parent[w].first != none) continue;
      parent[w] = {u, e};
      queue.push_back(w);
    }
  }
  return parent;
}

}  // namespace

Connectivity check_connected(Int sum_bound) {
  const BirGraph g = build_graph(sum_bound);
  Connectivity out;
  const Adjacency adj = adjacency(g);
  const auto parent = bfs(g, adj, 0);
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  out.connected = true;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (parent[i].first == none) out.connected = false;
    else if (parent[i].second != none) out.spanning_tree.push_back(g.edges[parent[i].second]);
  }
  return out;
}

std::pair<SPoint, SPoint> prime_witness(Int m) {
  if (m < 6 || m == 8) fail(ErrorCode::ExcludedSum, "prime witness needs m >= 6 and m != 8");
  Int p = 3;
  auto is_prime = [](Int q) {
    for (Int d = 2; d * d <= q; ++d)
      if (q % d == 0) return false;
    return true;
  };
  while (!is_prime(p) || (m + 1) % p == 0) p += 2;
  const SPoint upper{m + 1 - p, p};
  const SPoint lower{m - p + 2, p - 2};
  if (!in_S(upper) || !in_S(lower))
    fail(ErrorCode::InternalInvariant, "prime witness for m = " + std::to_string(m) + " left S");
  return {upper, lower};
}

std::vector<BirEdge> equivalence_path(SPoint x, SPoint y, Int sum_bound) {
  check_bound(sum_bound);
  if (!in_S(x) || !in_S(y)) fail(ErrorCode::NotInS, "endpoints must lie in S");
  if (x.sum() > sum_bound || y.sum() > sum_bound) fail(ErrorCode::NotInS, "endpoint beyond the sum bound");
  const BirGraph g = build_graph(sum_bound);
  const Adjacency adj = adjacency(g);
  const std::size_t sx = adj.index.at(x), sy = adj.index.at(y);
  const auto parent = bfs(g, adj, sx);
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  if (parent[sy].first == none)
    fail(ErrorCode::Unreachable, to_string(x) + " and " + to_string(y) + " are not connected");
  std::vector<BirEdge> path;
  for (std::size_t u = sy; u != sx; u = parent[u].first) path.push_back(g.edges[parent[u].second]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::map<std::string, std::vector<SPoint>> chi_buckets(Int sum_bound) {
  std::map<std::string, std::vector<SPoint>> out;
  // same (sum, a) order as the graph nodes
  for (Int s = 3; s <= sum_bound; ++s)
    for (Int b = (s - 1) / 2; b >= 1; --b) {
      SPoint p{s - b, b};
      if (std::gcd(p.a, p.b) != 1) continue;
      out[s >= 6 ? ">=6" : std::to_string(s)].push_back(p);
    }
  return out;
}

BirGraph oracle_graph(Int sum_bound) {
  check_bound(sum_bound);
  BirGraph g;
  g.sum_bound = sum_bound;
  // nodes: plain scan of the box, no helpers from build_graph
  for (Int a = 1; a <= sum_bound; ++a)
    for (Int b = 1; a + b <= sum_bound; ++b)
      if (a + b >= 6 && a > b && std::gcd(a, b) == 1) g.nodes.push_back({a, b});
  std::sort(g.nodes.begin(), g.nodes.end(), [](SPoint x, SPoint y) {
    return x.sum() != y.sum() ? x.sum() < y.sum() : x.a < y.a;
  });
  for (SPoint p : g.nodes)
    for (SPoint q : g.nodes) {
      if (p.a + p.b == q.a + q.b && p < q) g.edges.push_back({p, q, EdgeRule::SameSum});
      if (q.a == p.a + 1 && q.b == p.b - 2) g.edges.push_back({p, q, EdgeRule::ShiftMinusTwo});
      if (p.a == 5 && p.b == 4 && q.a == 7 && q.b == 1) g.edges.push_back({p, q, EdgeRule::Special});
    }
  std::sort(g.edges.begin(), g.edges.end(), edge_less);
  return g;
}

}  // namespace kurank2
