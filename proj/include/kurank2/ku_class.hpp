#pragma once

#include <compare>
#include <string>

#include "kurank2/lattice.hpp"

namespace kurank2 {

// n*alpha + m*beta in K_num(Ku(Y3)); gamma = beta - alpha = (-1,1).
struct KuClass {
  Int n = 0;
  Int m = 0;

  bool zero() const { return n == 0 && m == 0; }
  LatticeVector vec() const { return {n, m}; }
  static KuClass of(LatticeVector v) { return {v.a, v.b}; }

  friend auto operator<=>(const KuClass&, const KuClass&) = default;
  friend bool operator==(const KuClass&, const KuClass&) = default;
};

inline KuClass operator+(KuClass x, KuClass y) { return {add64(x.n, y.n), add64(x.m, y.m)}; }
inline KuClass operator-(KuClass x, KuClass y) { return {sub64(x.n, y.n), sub64(x.m, y.m)}; }
inline KuClass operator-(KuClass x) { return {neg64(x.n), neg64(x.m)}; }
inline KuClass operator*(Int k, KuClass x) { return {mul64(k, x.n), mul64(k, x.m)}; }

inline constexpr KuClass kAlpha{1, 0};
inline constexpr KuClass kBeta{0, 1};
inline constexpr KuClass kGamma{-1, 1};

// "(n,m)"
std::string to_string(KuClass v);

// Greek notation using the two rays bounding the class's sextant,
// e.g. (3,-2) -> "α-2γ", (-1,2) -> "β+γ", (0,0) -> "0".
std::string to_symbolic(KuClass v);

}  // namespace kurank2
