#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "kurank2/birgraph.hpp"
#include "kurank2/cubic3.hpp"
#include "kurank2/oracles.hpp"

using namespace kurank2;

namespace {

bool joins(const BirEdge& e, SPoint p, SPoint q) { return (e.x == p && e.y == q) || (e.x == q && e.y == p); }

bool has_edge(const BirGraph& g, SPoint p, SPoint q, EdgeRule r) {
  return std::any_of(g.edges.begin(), g.edges.end(), [&](const BirEdge& e) { return e.rule == r && joins(e, p, q); });
}

// spanning tree check by union-find over the node set
bool spans(const std::vector<SPoint>& nodes, const std::vector<BirEdge>& tree) {
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto idx = [&](SPoint p) { return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), p) - nodes.begin()); };
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const BirEdge& e : tree) {
    const std::size_t a = idx(e.x), b = idx(e.y);
    if (a >= nodes.size() || b >= nodes.size()) return false;
    if (find(a) == find(b)) return false;  // cycle
    parent[find(a)] = find(b);
  }
  return tree.size() + 1 == nodes.size();
}

}  // namespace

TEST_CASE("small graphs") {
  const BirGraph g6 = build_graph(6);
  CHECK(g6.nodes == std::vector<SPoint>{{5, 1}});
  CHECK(g6.edges.empty());
  const BirGraph g7 = build_graph(7);
  CHECK(g7.nodes == std::vector<SPoint>{{5, 1}, {4, 3}, {5, 2}, {6, 1}});
  CHECK(has_edge(g7, {4, 3}, {5, 2}, EdgeRule::SameSum));
  CHECK(has_edge(g7, {4, 3}, {6, 1}, EdgeRule::SameSum));
  CHECK(has_edge(g7, {5, 2}, {6, 1}, EdgeRule::SameSum));
  CHECK(has_edge(build_graph(9), {5, 4}, {7, 1}, EdgeRule::Special));
  CHECK_THROWS_AS(build_graph(5), Error);
}

TEST_CASE("edge rules") {
  for (const BirEdge& e : build_graph(60).edges) {
    CHECK(in_S(e.x));
    CHECK(in_S(e.y));
    CHECK(edge_valid(e));
  }
  CHECK_FALSE(edge_valid({{5, 4}, {7, 2}, EdgeRule::Special}));
  CHECK_FALSE(edge_valid({{5, 3}, {6, 1}, EdgeRule::SameSum}));
  CHECK(edge_valid({{5, 3}, {6, 1}, EdgeRule::ShiftMinusTwo}));
}

TEST_CASE("connectivity with spanning trees") {
  for (Int bound : {6, 9, 50, 200}) {
    CAPTURE(bound);
    const Connectivity c = check_connected(bound);
    CHECK(c.connected);
    for (const BirEdge& e : c.spanning_tree) CHECK(edge_valid(e));
    CHECK(spans(build_graph(bound).nodes, c.spanning_tree));
  }
}

TEST_CASE("prime witnesses") {
  CHECK(prime_witness(6) == std::pair<SPoint, SPoint>{{4, 3}, {5, 1}});
  CHECK(prime_witness(9) == std::pair<SPoint, SPoint>{{7, 3}, {8, 1}});
  CHECK_THROWS_AS(prime_witness(8), Error);
  CHECK_THROWS_AS(prime_witness(5), Error);
  for (Int m = 6; m <= 500; ++m) {
    if (m == 8) continue;
    const auto [p, q] = prime_witness(m);
    CHECK(in_S(p));
    CHECK(in_S(q));
    CHECK(p.sum() == m + 1);
    CHECK(q.sum() == m);
    CHECK(edge_valid({p, q, EdgeRule::ShiftMinusTwo}));
  }
}

TEST_CASE("equivalence paths") {
  const auto path = equivalence_path({7, 2}, {7, 1}, 9);
  REQUIRE(path.size() == 2);
  CHECK(joins(path[0], {7, 2}, {5, 4}));
  CHECK(path[0].rule == EdgeRule::SameSum);
  CHECK(joins(path[1], {5, 4}, {7, 1}));
  CHECK(path[1].rule == EdgeRule::Special);
  CHECK(equivalence_path({5, 1}, {5, 1}, 6).empty());
  const auto longer = equivalence_path({11, 2}, {5, 1}, 13);
  CHECK_FALSE(longer.empty());
  for (const BirEdge& e : longer) CHECK(edge_valid(e));
  CHECK_THROWS_AS(equivalence_path({4, 2}, {5, 1}, 9), Error);
}

TEST_CASE("rule-free oracle agrees") {
  for (Int bound : {6, 9, 30, 100}) {
    const BirGraph a = build_graph(bound), b = oracle_graph(bound);
    CHECK(a.nodes == b.nodes);
    std::set<std::tuple<SPoint, SPoint, int>> ea, eb;
    for (const BirEdge& e : a.edges) ea.insert({std::min(e.x, e.y), std::max(e.x, e.y), static_cast<int>(e.rule)});
    for (const BirEdge& e : b.edges) eb.insert({std::min(e.x, e.y), std::max(e.x, e.y), static_cast<int>(e.rule)});
    CHECK(ea == eb);
  }
  CHECK(oracle_tree(100, 500).agree());
}

TEST_CASE("chi threshold matches the sum threshold") {
  for (Int s = 2; s <= 200; ++s)
    for (Int b = 1; 2 * b < s; ++b) {
      const Int a = s - b;
      if (std::gcd(a, b) != 1) continue;
      const Wide c = chi({a, b}, {a, b});
      CHECK((s >= 6) == (c < -22));
    }
  const auto buckets = chi_buckets(20);
  CHECK(buckets.at("3") == std::vector<SPoint>{{2, 1}});
  CHECK(buckets.at("4") == std::vector<SPoint>{{3, 1}});
  CHECK(buckets.at("5") == std::vector<SPoint>{{3, 2}, {4, 1}});
  CHECK(buckets.at(">=6") == build_graph(20).nodes);
}
