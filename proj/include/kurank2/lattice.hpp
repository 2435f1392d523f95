#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "kurank2/arith.hpp"

namespace kurank2 {

struct LatticeVector {
  Int a = 0;
  Int b = 0;

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

inline LatticeVector operator+(LatticeVector u, LatticeVector v) {
  return {add64(u.a, v.a), add64(u.b, v.b)};
}
inline LatticeVector operator-(LatticeVector u, LatticeVector v) {
  return {sub64(u.a, v.a), sub64(u.b, v.b)};
}
inline LatticeVector operator-(LatticeVector v) { return {neg64(v.a), neg64(v.b)}; }
inline LatticeVector operator*(Int k, LatticeVector v) {
  return {mul64(k, v.a), mul64(k, v.b)};
}

std::string to_string(LatticeVector v);
std::ostream& operator<<(std::ostream& os, LatticeVector v);

Wide cross(LatticeVector u, LatticeVector v);
Wide dot(LatticeVector u, LatticeVector v);
Wide norm_sq(LatticeVector v);
Int gcd_abs(Int x, Int y);
bool is_primitive(LatticeVector v);

struct PickPair {
  LatticeVector minus;
  LatticeVector plus;
  friend bool operator==(const PickPair&, const PickPair&) = default;
};

// v = v- + v+ with cross(v-,v) = cross(v,v+) = cross(v-,v+) = 1 and both
// pieces strictly shorter; continued-fraction construction.
PickPair pick_decompose(LatticeVector v);

// Exhaustive search for the same pair; independent of pick_decompose.
PickPair pick_oracle(LatticeVector v);

// sin^2(pi * delta(v)) = 1 / (|v+|^2 |v-|^2)
Rational delta_sin_sq(LatticeVector v);

// Lattice points of the closed triangle 0, v, w; lexicographic order.
std::vector<LatticeVector> triangle_points(LatticeVector v, LatticeVector w);

// 2x2 integer matrix acting on column vectors.
struct Mat2 {
  Int m11 = 0, m12 = 0, m21 = 0, m22 = 0;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 from_columns(LatticeVector c1, LatticeVector c2) { return {c1.a, c2.a, c1.b, c2.b}; }

  LatticeVector operator()(LatticeVector v) const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator-() const { return {neg64(m11), neg64(m12), neg64(m21), neg64(m22)}; }
  Mat2 transpose() const { return {m11, m21, m12, m22}; }
  Wide det() const;
  Wide trace() const;
  // inverse of a matrix with det = +-1
  Mat2 unimodular_inverse() const;
  Mat2 pow(int k) const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

std::string to_string(const Mat2& m);

}  // namespace kurank2
