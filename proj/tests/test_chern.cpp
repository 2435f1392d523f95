#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "gen.hpp"
#include "kurank2/chern.hpp"
#include "kurank2/cubic3.hpp"
#include "kurank2/format.hpp"

using namespace kurank2;

namespace {

using Ch = ChernCharacterY3;

// Independent Riemann-Roch over the rationals: ch as (r, c1, c2, c3) in
// units of (1, H, L, P), td = 1 + H + 2L + P, H.H = 3L, H.L = P.
Rational hrr(const Ch& e, const Ch& f) {
  const std::array<Rational, 4> x{Rational(e.r), Rational(-e.c1), e.c2(), -e.c3()};
  const std::array<Rational, 4> y{Rational(f.r), Rational(f.c1), f.c2(), f.c3()};
  std::array<Rational, 4> p{};
  p[0] = x[0] * y[0];
  p[1] = x[0] * y[1] + x[1] * y[0];
  p[2] = x[0] * y[2] + x[2] * y[0] + 3 * x[1] * y[1];
  p[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
  // p.td integrated: td0 = 1, td1 = H, td2 = 2L, td3 = P
  return p[0] + 2 * p[1] + p[2] + p[3];
}

// integer combinations of twists of honest classes: O, I_line, I of a
// plane cubic, and alpha
Ch random_ch(kt::Gen& g) {
  const std::array<Ch, 4> gens{ch_structure_sheaf(), ch_beta(), ideal_curve_character(3, 1), ch_alpha()};
  Ch e{};
  for (const Ch& x : gens) e = e + g.between(-3, 3) * twist(x, g.between(-2, 2));
  return e;
}

}  // namespace

TEST_CASE("the three characters") {
  CHECK(to_string(ch_alpha()) == "(2, -H, -L/2, P/2)");
  CHECK(ch_beta() == Ch::make(1, 0, -1, 0));
  CHECK(ch_gamma() == Ch::make(-1, 1, Rational(-1, 2), Rational(-1, 2)));
  CHECK(ch_alpha() + ch_gamma() == ch_beta());
}

TEST_CASE("Euler table") {
  const Ch a = ch_alpha(), b = ch_beta(), c = ch_gamma();
  CHECK(euler_pairing(a, a) == -1);
  CHECK(euler_pairing(b, a) == -1);
  CHECK(euler_pairing(c, b) == -1);
  CHECK(euler_pairing(a, b) == 0);
  CHECK(euler_pairing(b, c) == 0);
  CHECK(euler_pairing(c, a) == 0);
  CHECK(euler_pairing(a, c) == 1);
  CHECK(euler_pairing(b, b) == -1);
  CHECK(euler_pairing(c, c) == -1);
  CHECK(euler_pairing(ch_structure_sheaf(), ch_structure_sheaf()) == 1);
  CHECK(euler_pairing(ch_structure_sheaf(), twist(ch_structure_sheaf(), 1)) == 5);
}

TEST_CASE("pairing agrees with an independent Riemann-Roch") {
  kt::Gen g(3);
  for (int i = 0; i < 2000; ++i) {
    const Ch e = random_ch(g), f = random_ch(g);
    CHECK(Rational(euler_pairing(e, f)) == hrr(e, f));
  }
}

TEST_CASE("pairing on the Ku span is the lattice form") {
  kt::Gen g(4);
  for (int i = 0; i < 500; ++i) {
    const KuClass v{g.between(-30, 30), g.between(-30, 30)};
    const KuClass w{g.between(-30, 30), g.between(-30, 30)};
    CHECK(Wide(euler_pairing(from_ku_class(v), from_ku_class(w))) == chi(v, w));
  }
}

TEST_CASE("to_ku_basis") {
  CHECK(to_ku_basis(ch_alpha()) == kAlpha);
  CHECK(to_ku_basis(ch_beta()) == kBeta);
  CHECK(to_ku_basis(ch_gamma()) == KuClass{-1, 1});
  CHECK(to_ku_basis(Ch::make(0, 1, Rational(-3, 2), Rational(-1, 2))) == KuClass{-1, 2});
  CHECK_THROWS_AS(to_ku_basis(ch_structure_sheaf()), Error);
  for (Int n = -10; n <= 10; ++n)
    for (Int m = -10; m <= 10; ++m) CHECK(to_ku_basis(from_ku_class({n, m})) == KuClass{n, m});
}

TEST_CASE("twist") {
  CHECK(twist(ch_beta(), 0) == ch_beta());
  CHECK(twist(Ch::make(1, 0, -2, 1), 1) == Ch::make(1, 1, Rational(-1, 2), Rational(-1, 2)));
  kt::Gen g(8);
  for (int i = 0; i < 1000; ++i) {
    const Ch e = random_ch(g);
    const Int k = g.between(-5, 5), l = g.between(-5, 5);
    CHECK(twist(twist(e, k), -k) == e);
    CHECK(twist(twist(e, k), l) == twist(e, k + l));
  }
}

TEST_CASE("projection to Ku") {
  CHECK(ku_project(ch_beta()) == ch_beta());
  CHECK(ku_project(twist(ideal_curve_character(2, 0), 1)) == ch_gamma());
  CHECK(ku_project(twist(ideal_curve_character(4, 1), 2)) == Ch::make(-2, 1, Rational(1, 2), Rational(-1, 2)));
  const Ch o = ch_structure_sheaf(), oh = twist(ch_structure_sheaf(), 1);
  kt::Gen g(9);
  for (int i = 0; i < 1000; ++i) {
    const Ch e = random_ch(g);
    const Ch p = ku_project(e);
    CHECK(ku_project(p) == p);
    CHECK(euler_pairing(o, p) == 0);
    CHECK(euler_pairing(oh, p) == 0);
  }
}

TEST_CASE("ideal sheaves of curves") {
  CHECK(ideal_curve_character(1, 0) == ch_beta());
  CHECK(ideal_curve_character(3, 0) == Ch::make(1, 0, -3, 2));
  CHECK(ideal_curve_character(4, 1) == Ch::make(1, 0, -4, 4));
  CHECK_THROWS_AS(ideal_curve_character(0, 0), Error);
}

TEST_CASE("curve table") {
  struct Row {
    Int d, g, m;
    KuClass v;
  };
  const KuClass a = kAlpha, b = kBeta, c = kGamma;
  const std::vector<Row> printed{
      {1, 0, 0, b},         {2, 0, 1, c},         {2, 0, 2, -b},         {3, 0, 1, b + c},
      {3, 1, 2, {0, 0}},    {4, 0, 1, 2 * b + c}, {4, 0, 2, -(2 * a) - b}, {4, 0, 3, a - 2 * c},
      {4, 1, 2, -a},        {5, 0, 3, -(2 * b) - c}, {5, 1, 2, -(2 * a)},  {5, 1, 3, -(2 * c)},
      {6, 1, 2, -(3 * a)},  {6, 1, 3, -(3 * b)},  {7, 2, 3, -a - 3 * b},
  };
  for (const Row& r : printed) {
    CAPTURE(r.d);
    CAPTURE(r.g);
    CAPTURE(r.m);
    CHECK(hilbert_character(r.d, r.g, r.m) == r.v);
  }
  // printed as -gamma; raising the genus by one adds a point class
  // [O_p] = alpha + beta to the projection, so (5,2,2) = (5,1,2) + alpha + beta
  CHECK(hilbert_character(5, 2, 2) == hilbert_character(5, 1, 2) + a + b);
  CHECK(hilbert_character(5, 2, 2) == c);
  CHECK(hilbert_table_rows().size() == 16);
  CHECK(to_symbolic(hilbert_character(7, 2, 3)) == "-α-3β");
  CHECK(to_symbolic(hilbert_character(3, 1, 2)) == "0");
}

TEST_CASE("high-dimensional Abel-Jacobi fibers") {
  for (Int m = 0; m <= 6; ++m) {
    const Int d = (3 * m * m + 3 * m) / 2 + 1;
    const Int g = m * m * m - m;
    const KuClass v = hilbert_character(d, g, m);
    CHECK(v == (m + 1) * kBeta + m * kGamma);
    CHECK(moduli_dim(v) == 2 * d);
  }
}
