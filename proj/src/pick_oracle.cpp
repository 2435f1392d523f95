// Brute-force counterpart of pick_decompose. Walks every column of the open
// disk |u| < |v|; in each column cross(u,v) = 1 leaves at most one u, and
// that candidate v- = u is tested against the remaining conditions on
// v+ = v - u. All pairs are collected, so non-uniqueness is detected. No
// continued fractions are involved.

#include <cmath>

#include "kurank2/lattice.hpp"

namespace kurank2 {

PickPair pick_oracle(LatticeVector v) {
  if (!is_primitive(v)) fail(ErrorCode::NotPrimitive, to_string(v) + " is not primitive");
  const Wide nv = norm_sq(v);
  if (nv <= 1) fail(ErrorCode::UnitVector, to_string(v) + " has norm 1; v+ and v- are undefined");

  Int radius = static_cast<Int>(std::sqrt(static_cast<long double>(nv)));
  while (static_cast<Wide>(radius) * radius >= nv) --radius;
  while (static_cast<Wide>(radius + 1) * (radius + 1) < nv) ++radius;

  std::vector<PickPair> found;
  for (Int x = -radius; x <= radius; ++x) {
    // cross(u, v) = x*v.b - y*v.a = 1 pins y once x is fixed
    if (v.a == 0) {
      // only (0,+-1) are primitive on this axis and they are excluded
      break;
    }
    Wide num = sub(mul(x, v.b), 1);
    if (num % v.a != 0) continue;
    Wide y = num / v.a;
    if (y < -radius || y > radius) continue;
    LatticeVector u{x, narrow(y)};
    if (norm_sq(u) >= nv) continue;
    LatticeVector w = v - u;
    if (norm_sq(w) >= nv) continue;
    if (cross(u, v) == 1 && cross(v, w) == 1 && cross(u, w) == 1) found.push_back({u, w});
  }
  if (found.size() != 1)
    fail(ErrorCode::OracleContradiction,
         "pick oracle found " + std::to_string(found.size()) + " pairs for " + to_string(v));
  return found.front();
}

}  // namespace kurank2
