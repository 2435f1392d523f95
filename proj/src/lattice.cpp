#include "kurank2/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace kurank2 {

std::string to_string(LatticeVector v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

std::ostream& operator<<(std::ostream& os, LatticeVector v) { return os << to_string(v); }

Wide cross(LatticeVector u, LatticeVector v) {
  return sub(mul(u.a, v.b), mul(u.b, v.a));
}

Wide dot(LatticeVector u, LatticeVector v) {
  return add(mul(u.a, v.a), mul(u.b, v.b));
}

Wide norm_sq(LatticeVector v) { return dot(v, v); }

Int gcd_abs(Int x, Int y) {
  // std::gcd on INT64_MIN is undefined; go through unsigned
  auto ux = x < 0 ? 0 - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
  auto uy = y < 0 ? 0 - static_cast<std::uint64_t>(y) : static_cast<std::uint64_t>(y);
  auto g = std::gcd(ux, uy);
  if (g > static_cast<std::uint64_t>(INT64_MAX)) fail(ErrorCode::Overflow, "gcd exceeds 64 bits");
  return static_cast<Int>(g);
}

bool is_primitive(LatticeVector v) {
  if (v.a == 0 && v.b == 0) return false;
  return gcd_abs(v.a, v.b) == 1;
}

namespace {

void check_decomposable(LatticeVector v) {
  if (!is_primitive(v)) fail(ErrorCode::NotPrimitive, to_string(v) + " is not primitive");
  if (norm_sq(v) <= 1) fail(ErrorCode::UnitVector, to_string(v) + " has norm 1; v+ and v- are undefined");
}

// Upper half plane, second coordinate >= 2.
PickPair pick_upper(Int n, Int m) {
  // continued fraction n/m = [a0; a1, ..., ai], ai >= 2 (automatic for
  // the Euclidean algorithm since gcd = 1 and m >= 2)
  std::vector<Int> coeffs;
  for (Int p = n, q = m; q != 0;) {
    Int t = floor_div(p, q);
    coeffs.push_back(t);
    Int r = p - t * q;
    p = q;
    q = r;
  }
  const std::size_t i = coeffs.size() - 1;
  // convergent [a0; ..., a_{i-1}]
  Int p_prev = 1, q_prev = 0, p_cur = coeffs[0], q_cur = 1;
  for (std::size_t k = 1; k < i; ++k) {
    Int p_next = add64(mul64(coeffs[k], p_cur), p_prev);
    Int q_next = add64(mul64(coeffs[k], q_cur), q_prev);
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
  LatticeVector v{n, m};
  LatticeVector c{p_cur, q_cur};
  LatticeVector d = v - c;
  // cross(c, v) = (-1)^i
  if (i % 2 == 0) return {c, d};
  return {d, c};
}

}  // namespace

PickPair pick_decompose(LatticeVector v) {
  check_decomposable(v);
  const Int n = v.a, m = v.b;
  if (m <= -1) {
    PickPair p = pick_decompose(-v);
    return {-p.minus, -p.plus};
  }
  if (m == 1) {
    if (n > 0) return {{1, 0}, {n - 1, 1}};
    return {{n + 1, 1}, {-1, 0}};
  }
  // m == 0 is excluded above (primitive means (+-1,0)), so m >= 2
  return pick_upper(n, m);
}

Rational delta_sin_sq(LatticeVector v) {
  PickPair p = pick_decompose(v);
  BigInt den = to_big(norm_sq(p.plus)) * to_big(norm_sq(p.minus));
  return Rational(BigInt(1), den);
}

std::vector<LatticeVector> triangle_points(LatticeVector v, LatticeVector w) {
  const Wide area = cross(v, w);
  if (area <= 0) fail(ErrorCode::NonPositiveOrientation, "cross(v,w) must be positive");
  const Int a_lo = std::min<Int>({0, v.a, w.a}), a_hi = std::max<Int>({0, v.a, w.a});
  const Int b_lo = std::min<Int>({0, v.b, w.b}), b_hi = std::max<Int>({0, v.b, w.b});
  std::vector<LatticeVector> out;
  for (Int a = a_lo; a <= a_hi; ++a) {
    for (Int b = b_lo; b <= b_hi; ++b) {
      LatticeVector u{a, b};
      Wide s = cross(u, w), t = cross(v, u);
      if (s >= 0 && t >= 0 && add(s, t) <= area) out.push_back(u);
    }
  }
  return out;
}

LatticeVector Mat2::operator()(LatticeVector v) const {
  return {narrow(add(mul(m11, v.a), mul(m12, v.b))), narrow(add(mul(m21, v.a), mul(m22, v.b)))};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  auto entry = [](Int x1, Int y1, Int x2, Int y2) { return narrow(add(mul(x1, y1), mul(x2, y2))); };
  return {entry(m11, o.m11, m12, o.m21), entry(m11, o.m12, m12, o.m22),
          entry(m21, o.m11, m22, o.m21), entry(m21, o.m12, m22, o.m22)};
}

Wide Mat2::det() const { return sub(mul(m11, m22), mul(m12, m21)); }
Wide Mat2::trace() const { return add(m11, m22); }

Mat2 Mat2::unimodular_inverse() const {
  Wide d = det();
  if (d == 1) return {m22, neg64(m12), neg64(m21), m11};
  if (d == -1) return {neg64(m22), m12, m21, neg64(m11)};
  fail(ErrorCode::PreconditionFailed, "matrix " + to_string(*this) + " is not unimodular");
}

Mat2 Mat2::pow(int k) const {
  if (k < 0) return unimodular_inverse().pow(-k);
  Mat2 r = identity();
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string to_string(const Mat2& m) {
  return "[[" + std::to_string(m.m11) + "," + std::to_string(m.m12) + "],[" + std::to_string(m.m21) +
         "," + std::to_string(m.m22) + "]]";
}

}  // namespace kurank2
