#include "kurank2/ku_class.hpp"

#include <algorithm>
#include <array>

#include "kurank2/cubic3.hpp"

namespace kurank2 {

std::string to_string(KuClass v) { return "(" + std::to_string(v.n) + "," + std::to_string(v.m) + ")"; }

std::string to_symbolic(KuClass v) {
  if (v.zero()) return "0";
  static const std::array<const char*, 3> letters{"α", "β", "γ"};
  const int s = sextant_index(v);
  // R^j(alpha) is +-alpha, +-beta, +-gamma cyclically
  auto ray = [](int j) {
    KuClass g = kAlpha;
    for (int i = 0; i < j; ++i) g = rotate(g);
    return g;
  };
  const KuClass g1 = ray(s), g2 = ray((s + 1) % 6);
  // cross(g1, g2) = 1
  const Wide p = cross(v.vec(), g2.vec());
  const Wide q = cross(g1.vec(), v.vec());
  struct Term {
    int letter;
    Wide coeff;
  };
  std::array<Term, 2> terms{Term{s % 3, s < 3 ? p : -p}, Term{(s + 1) % 6 % 3, (s + 1) % 6 < 3 ? q : -q}};
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.letter < y.letter; });
  std::string out;
  for (const Term& t : terms) {
    if (t.coeff == 0) continue;
    if (t.coeff > 0 && !out.empty()) out += "+";
    if (t.coeff == -1) out += "-";
    else if (t.coeff != 1) out += to_string(t.coeff);
    out += letters[t.letter];
  }
  return out;
}

}  // namespace kurank2
