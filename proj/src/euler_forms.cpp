#include "kurank2/euler_forms.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace kurank2 {

Wide EulerForm::operator()(LatticeVector u, LatticeVector v) const {
  Wide mv1 = add(mul(m.m11, v.a), mul(m.m12, v.b));
  Wide mv2 = add(mul(m.m21, v.a), mul(m.m22, v.b));
  return add(mul(u.a, mv1), mul(u.b, mv2));
}

bool EulerForm::negative_semidefinite() const {
  Wide s = add(m.m12, m.m21);
  return m.m11 <= 0 && m.m22 <= 0 && mul(s, s) <= mul(4, mul(m.m11, m.m22));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::IPlus: return "I+";
    case Family::IMinus: return "I-";
    case Family::JPlus: return "J+";
    case Family::JMinus: return "J-";
    case Family::KPlus: return "K+";
    case Family::KMinus: return "K-";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::IPlus, Family::IMinus, Family::JPlus, Family::JMinus, Family::KPlus, Family::KMinus})
    if (to_string(f) == s) return f;
  fail(ErrorCode::Parse, "unknown family '" + s + "'");
}

EulerForm family_form(Family f, Int n) {
  switch (f) {
    case Family::IPlus: return {{-n, n, 0, -n}};
    case Family::IMinus: return {{-n, -n, 0, -n}};
    case Family::JPlus: return {{-n, n, -n, -n}};
    case Family::JMinus: return {{-n, -n, n, -n}};
    case Family::KPlus: return {{-n, n, mul64(-2, n), -n}};
    case Family::KMinus: return {{-n, -n, mul64(2, n), -n}};
  }
  fail(ErrorCode::Unreachable, "bad family");
}

SerreIsometry family_serre(Family f) {
  switch (f) {
    case Family::IPlus: return {{0, 1, -1, 1}};
    case Family::IMinus: return {{0, -1, 1, 1}};
    case Family::JPlus: return {{0, 1, -1, 0}};
    case Family::JMinus: return {{0, -1, 1, 0}};
    case Family::KPlus: return {{0, 1, -1, -1}};
    case Family::KMinus: return {{0, -1, 1, -1}};
  }
  fail(ErrorCode::Unreachable, "bad family");
}

EulerForm change_basis(const EulerForm& q, const Mat2& p) { return {p.transpose() * q.m * p}; }

SerreIsometry change_basis(const SerreIsometry& s, const Mat2& p) {
  return {p.unimodular_inverse() * s.d * p};
}

bool compatible(const EulerForm& q, const SerreIsometry& s) {
  return q.m == s.d.transpose() * q.m.transpose();
}

int serre_order(const SerreIsometry& s) {
  if (s.d.det() != 1) fail(ErrorCode::FixedVector, "Serre matrix must have determinant 1");
  switch (static_cast<int>(s.d.trace())) {
    case -1: return 3;
    case 0: return 4;
    case 1: return 6;
    default: break;
  }
  fail(ErrorCode::FixedVector, "trace outside {-1,0,1}: D has a +-fixed vector");
}

namespace {

// Largest Q(x,x) over nonzero x and the preferred maximizer
// (lexicographically smallest with a > 0, or a = 0 and b > 0).
struct MaxResult {
  Wide value;
  LatticeVector arg;
};

// Lagrange-Gauss reduction for the positive definite form -2 sym(Q). The
// first vector of a reduced basis (u, v) is a minimum, and every minimum
// is one of +-u, +-v, +-(u-v), +-(u+v).
MaxResult max_self_pairing(const EulerForm& q) {
  const Wide p = -q.m.m11, r = -q.m.m22, h = -add(q.m.m12, q.m.m21);
  auto B = [&](LatticeVector x, LatticeVector y) {
    return add(add(mul(mul(2, p), mul(x.a, y.a)), mul(mul(2, r), mul(x.b, y.b))),
               mul(h, add(mul(x.a, y.b), mul(x.b, y.a))));
  };
  LatticeVector u{1, 0}, v{0, 1};
  if (B(u, u) > B(v, v)) std::swap(u, v);
  for (;;) {
    const Wide uu = B(u, u);
    // nearest integer to B(u,v)/B(u,u)
    const Wide num = add(mul(2, B(u, v)), uu), den = mul(2, uu);
    Wide k = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --k;
    v = v - narrow(k) * u;
    if (B(v, v) < uu) std::swap(u, v);
    else break;
  }
  std::optional<MaxResult> best;
  for (LatticeVector x : {u, v, u - v, u + v}) {
    if (x.a < 0 || (x.a == 0 && x.b < 0)) x = -x;
    const Wide val = q.self(x);
    if (!best || val > best->value || (val == best->value && x < best->arg)) best = MaxResult{val, x};
  }
  return *best;
}

}  // namespace

CanonicalForm classify_form(const EulerForm& q, const SerreIsometry& s) {
  if (q.degenerate()) fail(ErrorCode::Degenerate, "Euler form is degenerate");
  if (!q.negative_semidefinite()) fail(ErrorCode::NotNegative, "Q(x,x) > 0 for some x");
  int order = serre_order(s);
  if (!compatible(q, s)) fail(ErrorCode::Incompatible, "Q(x,y) != Q(y,Dx)");

  {
    const Wide h = add(q.m.m12, q.m.m21);
    if (mul(h, h) == mul(4, mul(q.m.m11, q.m.m22)))
      fail(ErrorCode::NotNegative, "Q(x,x) vanishes on a nonzero rational direction");
  }
  const MaxResult cur = max_self_pairing(q);
  const LatticeVector x = cur.arg;
  const Int n = narrow(-cur.value);
  if (n <= 0) fail(ErrorCode::NotNegative, "maximum of Q(x,x) is 0");

  const LatticeVector dx = s.d(x);
  const Wide t = q(dx, x);
  const bool right_handed = cross(x, dx) == 1;
  const LatticeVector second = right_handed ? dx : -dx;
  Family family;
  if (t == 0) {
    family = right_handed ? Family::IMinus : Family::IPlus;
  } else if (t == n) {
    family = right_handed ? Family::JMinus : Family::JPlus;
  } else if (t == 2 * static_cast<Wide>(n)) {
    family = right_handed ? Family::KMinus : Family::KPlus;
  } else {
    fail(ErrorCode::InternalInvariant, "Q(Dx,x) = " + to_string(t) + " is not 0, n or 2n");
  }

  CanonicalForm out{family, n, Mat2::from_columns(x, second)};
  if (cross(x, second) != 1 || change_basis(q, out.basis_change) != family_form(family, n))
    fail(ErrorCode::InternalInvariant, "canonical basis does not reproduce the family matrix");
  const int expected = (family == Family::IPlus || family == Family::IMinus)   ? 6
                       : (family == Family::JPlus || family == Family::JMinus) ? 4
                                                                              : 3;
  if (order != expected) fail(ErrorCode::InternalInvariant, "Serre order does not match family");
  return out;
}

namespace {

// radius with |v|^2 <= reach * 4tr/(4det) covering {v : -Q(v,v) <= reach}
Int search_radius(const EulerForm& q, Int reach) {
  const double p = -static_cast<double>(q.m.m11), r = -static_cast<double>(q.m.m22);
  const double h = static_cast<double>(q.m.m12 + q.m.m21);
  const double det4 = 4 * p * r - h * h;
  const double bound = static_cast<double>(reach) * 4 * (p + r) / det4;
  return static_cast<Int>(std::sqrt(bound)) + 2;
}

std::vector<LatticeVector> exceptional_within(const EulerForm& q, Int reach) {
  const Int radius = search_radius(q, reach);
  std::vector<LatticeVector> out;
  for (Int a = -radius; a <= radius; ++a) {
    for (Int b = -radius; b <= radius; ++b) {
      LatticeVector v{a, b};
      if (!is_primitive(v) || norm_sq(v) <= 1 || -q.self(v) > reach) continue;
      PickPair p = pick_decompose(v);
      if (q(p.plus, p.minus) >= 0) out.push_back(v);
    }
  }
  return out;
}

}  // namespace

std::vector<LatticeVector> exceptional_vectors(const CanonicalForm& form) {
  const EulerForm q = family_form(form.family, form.n);
  // region -Q(v,v) <= 6n; widen until a doubling adds nothing and the outer
  // half is empty. Values of -Q can skip (K- has none at 5n), so one empty
  // shell alone is not enough.
  Int reach = mul64(6, form.n);
  auto found = exceptional_within(q, reach);
  for (;;) {
    auto wider = exceptional_within(q, mul64(reach, 2));
    Wide worst = 0;
    for (auto v : found) worst = std::max(worst, -q.self(v));
    if (wider == found && 2 * worst <= reach) {
      std::sort(found.begin(), found.end());
      return found;
    }
    found = std::move(wider);
    reach = mul64(reach, 2);
  }
}

Int n_chi(const CanonicalForm& form) {
  const EulerForm q = family_form(form.family, form.n);
  Wide worst = 0;
  for (auto v : exceptional_vectors(form)) worst = std::max(worst, -q.self(v));
  return narrow(worst);
}

}  // namespace kurank2
