#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kurank2/arith.hpp"

namespace kurank2 {

// (a,b) stands for a*alpha + b*beta in the (alpha,beta)-sextant
struct SPoint {
  Int a = 0;
  Int b = 0;
  Int sum() const { return a + b; }
  friend auto operator<=>(const SPoint&, const SPoint&) = default;
  friend bool operator==(const SPoint&, const SPoint&) = default;
};

std::string to_string(SPoint p);

enum class EdgeRule { SameSum, ShiftMinusTwo, Special };

std::string to_string(EdgeRule r);

// SameSum: x < y. ShiftMinusTwo: y = (x.a+1, x.b-2). Special: (5,4)-(7,1).
struct BirEdge {
  SPoint x;
  SPoint y;
  EdgeRule rule = EdgeRule::SameSum;
  friend bool operator==(const BirEdge&, const BirEdge&) = default;
};

struct BirGraph {
  Int sum_bound = 0;
  std::vector<SPoint> nodes;  // sorted by (sum, a)
  std::vector<BirEdge> edges;
};

// S = {a + b >= 6, a > b >= 1, gcd(a,b) = 1}
bool in_S(SPoint p);
bool edge_valid(const BirEdge& e);

BirGraph build_graph(Int sum_bound);
// SameSum drawn as a path through each level instead of a clique
std::vector<BirEdge> drawn_edges(const BirGraph& g);

struct Connectivity {
  bool connected = false;
  std::vector<BirEdge> spanning_tree;
};

Connectivity check_connected(Int sum_bound);

std::pair<SPoint, SPoint> prime_witness(Int m);

std::vector<BirEdge> equivalence_path(SPoint x, SPoint y, Int sum_bound);

// Buckets of coprime a > b >= 1 by a+b, following the chi ranges used for
// stable birationality: ">=6" (chi < -22), "5" (chi in [-21,-16]),
// "4" (chi = -13), "3" (chi = -7). The small buckets are not joined to
// the main graph.
std::map<std::string, std::vector<SPoint>> chi_buckets(Int sum_bound);

// Rule-free reference: tests every pair against the raw definitions.
BirGraph oracle_graph(Int sum_bound);

}  // namespace kurank2
