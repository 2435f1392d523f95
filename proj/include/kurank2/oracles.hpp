#pragma once

#include <string>
#include <vector>

#include "kurank2/euler_forms.hpp"

namespace kurank2 {

struct OracleReport {
  std::string suite;
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  std::vector<std::string> details;
  bool agree() const { return disagreements == 0; }
};

// pick_decompose vs pick_oracle over primitive v with 1 < norm_sq <= bound
OracleReport oracle_pick(Int norm_bound, unsigned threads = 1);

// Lattice points of the triangle 0, v, w found by stepping barycentric
// coordinates (i/D, j/D), D = cross(v,w); no cross-product predicates.
std::vector<LatticeVector> naive_triangle_points(LatticeVector v, LatticeVector w);
OracleReport oracle_triangle(Int coord_bound, Int max_cross, unsigned threads = 1);

// every primitive v with 1 < norm_sq <= bound and Q(v+,v-) >= 0, using
// pick_oracle for the decomposition
std::vector<LatticeVector> exceptional_oracle(Family family, Int n, Int norm_bound);
OracleReport oracle_exceptional(Int norm_bound);

// build_graph vs the rule-free oracle, connectivity, prime witnesses
OracleReport oracle_tree(Int oracle_bound, Int witness_bound);

}  // namespace kurank2
