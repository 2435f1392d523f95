// Certificate checker. Deliberately shares nothing with the builder in
// certifier.cpp: base membership, pairings and the gldim guard are
// recomputed here from the raw catalog matrices.

#include <vector>

#include "kurank2/certifier.hpp"

namespace kurank2 {

namespace {

Wide raw_pairing(const Mat2& m, LatticeVector u, LatticeVector v) {
  // u^T M v written out entrywise
  Wide s = 0;
  s = add(s, mul(mul(u.a, m.m11), v.a));
  s = add(s, mul(mul(u.a, m.m12), v.b));
  s = add(s, mul(mul(u.b, m.m21), v.a));
  s = add(s, mul(mul(u.b, m.m22), v.b));
  return s;
}

bool raw_base(const FanoKuEntry& e, LatticeVector v) {
  if (norm_sq(v) == 1) return true;
  if (e.base.kind == BaseKind::CurveRank) return v.a == 1 || v.a == -1;
  return raw_pairing(e.euler.m, v, v) >= e.base.chi_threshold;
}

bool raw_guard(const GldimBound& g, const Wide& norm_product) {
  if (g.value < Rational(5, 2)) return true;
  if (g.value == Rational(5, 2)) return g.strict || norm_product > 1;
  return false;
}

VerifyResult bad(std::size_t i, const std::string& why) {
  return {false, "node " + std::to_string(i) + ": " + why};
}

}  // namespace

VerifyResult verify(const Certificate& cert) { return verify(cert, lookup(cert.entry)); }

VerifyResult verify(const Certificate& cert, const FanoKuEntry& entry) {
  if (!(entry.label == cert.entry)) return {false, "certificate belongs to another entry"};
  if (cert.nodes.empty() || cert.root >= cert.nodes.size()) return {false, "root index out of range"};
  if (!(cert.nodes[cert.root].v == cert.root_vector)) return {false, "root node does not carry the root vector"};
  for (std::size_t i = 0; i < cert.nodes.size(); ++i) {
    const CertNode& n = cert.nodes[i];
    switch (n.kind) {
      case NodeKind::Base: {
        if (!raw_base(entry, n.v)) return bad(i, to_string(n.v) + " is not in the base set");
        const bool unit = norm_sq(n.v) == 1;
        if (unit != (n.reason == BaseReason::UnitNorm)) return bad(i, "unit-norm reason mismatch");
        break;
      }
      case NodeKind::Split: {
        if (n.plus_child >= i || n.minus_child >= i) return bad(i, "children must precede their parent");
        if (!is_primitive(n.v) || norm_sq(n.v) <= 1) return bad(i, "split vector must be primitive of norm > 1");
        if (!(cert.nodes[n.plus_child].v == n.v_plus) || !(cert.nodes[n.minus_child].v == n.v_minus))
          return bad(i, "children do not carry v+ and v-");
        if (add(n.v_plus.a, n.v_minus.a) != n.v.a || add(n.v_plus.b, n.v_minus.b) != n.v.b)
          return bad(i, "v != v+ + v-");
        if (cross(n.v_minus, n.v) != 1 || cross(n.v, n.v_plus) != 1 || cross(n.v_minus, n.v_plus) != 1)
          return bad(i, "cross conditions fail");
        if (norm_sq(n.v_plus) >= norm_sq(n.v) || norm_sq(n.v_minus) >= norm_sq(n.v))
          return bad(i, "children are not shorter");
        const Wide chi = raw_pairing(entry.euler.m, n.v_plus, n.v_minus);
        if (chi != n.chi_cross) return bad(i, "recorded chi(v+,v-) is wrong");
        if (chi >= 0) return bad(i, "chi(v+,v-) is not negative");
        const Wide prod = mul(norm_sq(n.v_plus), norm_sq(n.v_minus));
        if (n.delta_sin_sq != Rational(BigInt(1), to_big(prod))) return bad(i, "recorded sin^2(pi delta) is wrong");
        if (!raw_guard(entry.gldim, prod)) return bad(i, "gldim guard fails");
        break;
      }
      case NodeKind::Multiple: {
        if (n.child >= i) return bad(i, "child must precede its parent");
        const LatticeVector c = cert.nodes[n.child].v;
        if (n.multiplicity < 2 || !is_primitive(c)) return bad(i, "multiple must wrap a primitive class");
        if (mul(n.multiplicity, c.a) != n.v.a || mul(n.multiplicity, c.b) != n.v.b)
          return bad(i, "v != k * child");
        break;
      }
    }
  }
  return {};
}

}  // namespace kurank2
