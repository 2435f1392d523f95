#pragma once

#include <string>

#include "kurank2/arith.hpp"
#include "kurank2/ku_class.hpp"

namespace kurank2 {

// ch = r + c1*H + c2*L + c3*P on a cubic threefold, with H^2 = 3L,
// H.L = P, H^3 = 3P. c2 is stored in halves and c3 in sixths.
struct ChernCharacterY3 {
  Int r = 0;
  Int c1 = 0;
  Int c2_halves = 0;
  Int c3_sixths = 0;

  static ChernCharacterY3 make(Int r, Int c1, const Rational& c2, const Rational& c3);
  Rational c2() const { return Rational(c2_halves, 2); }
  Rational c3() const { return Rational(c3_sixths, 6); }

  friend bool operator==(const ChernCharacterY3&, const ChernCharacterY3&) = default;
};

ChernCharacterY3 operator+(const ChernCharacterY3& x, const ChernCharacterY3& y);
ChernCharacterY3 operator-(const ChernCharacterY3& x, const ChernCharacterY3& y);
ChernCharacterY3 operator*(Int k, const ChernCharacterY3& x);

// "(2, -H, -L/2, P/2)"
std::string to_string(const ChernCharacterY3& e);

ChernCharacterY3 ch_structure_sheaf();
ChernCharacterY3 ch_alpha();
ChernCharacterY3 ch_beta();
ChernCharacterY3 ch_gamma();

Int euler_pairing(const ChernCharacterY3& e, const ChernCharacterY3& f);
ChernCharacterY3 twist(const ChernCharacterY3& e, Int k);
// left mutation through O(H) then O, at the level of K-theory
ChernCharacterY3 ku_project(const ChernCharacterY3& e);
KuClass to_ku_basis(const ChernCharacterY3& e);
ChernCharacterY3 from_ku_class(KuClass v);
ChernCharacterY3 ideal_curve_character(Int d, Int g);
KuClass hilbert_character(Int d, Int g, Int m);

}  // namespace kurank2
