#include "kurank2/oracles.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "kurank2/birgraph.hpp"
#include "kurank2/certifier.hpp"

namespace kurank2 {

namespace {

// runs body(i) for i in [0, count) over a fixed stride partition; per-index
// results are written by the body, so the outcome does not depend on timing
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += threads) body(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

constexpr std::size_t kMaxDetails = 20;

void note(OracleReport& r, const std::string& s) {
  if (r.details.size() < kMaxDetails) r.details.push_back(s);
}

}  // namespace

OracleReport oracle_pick(Int norm_bound, unsigned threads) {
  std::vector<LatticeVector> vs;
  for (LatticeVector v : primitive_vectors(norm_bound))
    if (norm_sq(v) > 1) vs.push_back(v);
  std::vector<char> same(vs.size(), 0);
  parallel_for(vs.size(), threads, [&](std::size_t i) { same[i] = pick_decompose(vs[i]) == pick_oracle(vs[i]); });
  OracleReport r{"pick", vs.size(), 0, {}};
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!same[i]) {
      ++r.disagreements;
      note(r, "disagreement at " + to_string(vs[i]));
    }
  return r;
}

std::vector<LatticeVector> naive_triangle_points(LatticeVector v, LatticeVector w) {
  const Wide d = cross(v, w);
  if (d <= 0) fail(ErrorCode::NonPositiveOrientation, "cross(v,w) must be positive");
  std::vector<LatticeVector> out;
  for (Wide i = 0; i <= d; ++i)
    for (Wide j = 0; i + j <= d; ++j) {
      // u = (i v + j w) / d must be integral
      Wide x = add(mul(i, v.a), mul(j, w.a)), y = add(mul(i, v.b), mul(j, w.b));
      if (x % d == 0 && y % d == 0) out.push_back({narrow(x / d), narrow(y / d)});
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OracleReport oracle_triangle(Int coord_bound, Int max_cross, unsigned threads) {
  std::vector<std::pair<LatticeVector, LatticeVector>> pairs;
  for (Int a = -coord_bound; a <= coord_bound; ++a)
    for (Int b = -coord_bound; b <= coord_bound; ++b)
      for (Int c = -coord_bound; c <= coord_bound; ++c)
        for (Int d = -coord_bound; d <= coord_bound; ++d) {
          LatticeVector v{a, b}, w{c, d};
          Wide x = cross(v, w);
          if (x > 0 && x <= max_cross) pairs.push_back({v, w});
        }
  std::vector<char> same(pairs.size(), 0);
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    same[i] = triangle_points(pairs[i].first, pairs[i].second) ==
              naive_triangle_points(pairs[i].first, pairs[i].second);
  });
  OracleReport r{"triangle", pairs.size(), 0, {}};
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!same[i]) {
      ++r.disagreements;
      note(r, "disagreement at " + to_string(pairs[i].first) + ", " + to_string(pairs[i].second));
    }
  return r;
}

std::vector<LatticeVector> exceptional_oracle(Family family, Int n, Int norm_bound) {
  const Mat2 m = family_form(family, n).m;
  std::vector<LatticeVector> out;
  for (LatticeVector v : primitive_vectors(norm_bound)) {
    if (norm_sq(v) <= 1) continue;
    PickPair p = pick_oracle(v);
    // Q(v+, v-) from the raw matrix
    Wide q = add(add(mul(mul(p.plus.a, m.m11), p.minus.a), mul(mul(p.plus.a, m.m12), p.minus.b)),
                 add(mul(mul(p.plus.b, m.m21), p.minus.a), mul(mul(p.plus.b, m.m22), p.minus.b)));
    if (q >= 0) out.push_back(v);
  }
  return out;
}

OracleReport oracle_exceptional(Int norm_bound) {
  OracleReport r{"exceptional", 0, 0, {}};
  for (Family f : {Family::IPlus, Family::IMinus, Family::JPlus, Family::JMinus, Family::KPlus, Family::KMinus}) {
    ++r.checked;
    CanonicalForm form{f, 1, Mat2::identity()};
    auto claimed = exceptional_vectors(form);
    auto brute = exceptional_oracle(f, 1, norm_bound);
    if (claimed != brute) {
      ++r.disagreements;
      note(r, to_string(f) + ": exceptional set differs from brute force");
    } else {
      note(r, to_string(f) + ": " + std::to_string(claimed.size()) + " vectors, N_chi = " +
                  std::to_string(n_chi(form)));
    }
  }
  return r;
}

OracleReport oracle_tree(Int oracle_bound, Int witness_bound) {
  OracleReport r{"tree", 0, 0, {}};
  for (Int bound = 6; bound <= oracle_bound; ++bound) {
    ++r.checked;
    BirGraph g = build_graph(bound), o = oracle_graph(bound);
    if (g.nodes != o.nodes || g.edges != o.edges) {
      ++r.disagreements;
      note(r, "graph differs from oracle at sum bound " + std::to_string(bound));
    }
  }
  for (Int bound : {Int{9}, Int{50}, Int{200}}) {
    ++r.checked;
    Connectivity c = check_connected(bound);
    bool tree_ok = c.spanning_tree.size() + 1 == build_graph(bound).nodes.size();
    for (const auto& e : c.spanning_tree) tree_ok = tree_ok && edge_valid(e);
    if (!c.connected || !tree_ok) {
      ++r.disagreements;
      note(r, "connectivity witness fails at sum bound " + std::to_string(bound));
    }
  }
  for (Int m = 6; m <= witness_bound; ++m) {
    if (m == 8) continue;
    ++r.checked;
    auto [upper, lower] = prime_witness(m);
    BirEdge e{upper, lower, EdgeRule::ShiftMinusTwo};
    if (!edge_valid(e) || lower.sum() != m || upper.sum() != m + 1) {
      ++r.disagreements;
      note(r, "prime witness fails at m = " + std::to_string(m));
    }
  }
  return r;
}

}  // namespace kurank2
