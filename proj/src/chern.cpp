#include "kurank2/chern.hpp"

#include <array>

namespace kurank2 {

namespace {

// exact coefficients in the basis 1, H, L, P
using Poly = std::array<Rational, 4>;

Poly to_poly(const ChernCharacterY3& e) {
  return {Rational(e.r), Rational(e.c1), e.c2(), e.c3()};
}

Poly times(const Poly& x, const Poly& y) {
  return {x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[0] * y[2] + x[2] * y[0] + 3 * x[1] * y[1],
          x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1]};
}

Int integral(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1)
    fail(ErrorCode::IntegralityViolation, std::string(what) + " is not integral: " + to_string(q));
  BigInt num = boost::multiprecision::numerator(q);
  if (num > INT64_MAX || num < INT64_MIN) fail(ErrorCode::Overflow, std::string(what) + " exceeds 64 bits");
  return static_cast<Int>(num);
}

ChernCharacterY3 from_poly(const Poly& p) {
  return {integral(p[0], "rank"), integral(p[1], "c1"), integral(2 * p[2], "2*c2"), integral(6 * p[3], "6*c3")};
}

std::string term(const Rational& q, const char* sym) {
  if (q == 0) return "0";
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  std::string s = num == 1 ? "" : (num == -1 ? "-" : num.str());
  s += sym;
  if (den != 1) s += "/" + den.str();
  return s;
}

}  // namespace

ChernCharacterY3 ChernCharacterY3::make(Int r, Int c1, const Rational& c2, const Rational& c3) {
  return from_poly({Rational(r), Rational(c1), c2, c3});
}

ChernCharacterY3 operator+(const ChernCharacterY3& x, const ChernCharacterY3& y) {
  return {add64(x.r, y.r), add64(x.c1, y.c1), add64(x.c2_halves, y.c2_halves), add64(x.c3_sixths, y.c3_sixths)};
}

ChernCharacterY3 operator-(const ChernCharacterY3& x, const ChernCharacterY3& y) {
  return {sub64(x.r, y.r), sub64(x.c1, y.c1), sub64(x.c2_halves, y.c2_halves), sub64(x.c3_sixths, y.c3_sixths)};
}

ChernCharacterY3 operator*(Int k, const ChernCharacterY3& x) {
  return {mul64(k, x.r), mul64(k, x.c1), mul64(k, x.c2_halves), mul64(k, x.c3_sixths)};
}

std::string to_string(const ChernCharacterY3& e) {
  return "(" + std::to_string(e.r) + ", " + term(Rational(e.c1), "H") + ", " + term(e.c2(), "L") + ", " +
         term(e.c3(), "P") + ")";
}

ChernCharacterY3 ch_structure_sheaf() { return {1, 0, 0, 0}; }
ChernCharacterY3 ch_alpha() { return ChernCharacterY3::make(2, -1, Rational(-1, 2), Rational(1, 2)); }
ChernCharacterY3 ch_beta() { return ChernCharacterY3::make(1, 0, -1, 0); }
ChernCharacterY3 ch_gamma() { return ch_beta() - ch_alpha(); }

Int euler_pairing(const ChernCharacterY3& e, const ChernCharacterY3& f) {
  Poly dual = to_poly(e);
  dual[1] = -dual[1];
  dual[3] = -dual[3];
  const Poly td{Rational(1), Rational(1), Rational(2), Rational(1)};
  return integral(times(times(dual, to_poly(f)), td)[3], "Euler pairing");
}

ChernCharacterY3 twist(const ChernCharacterY3& e, Int k) {
  const Rational kk(k);
  const Poly exp_kh{Rational(1), kk, Rational(3) * kk * kk / 2, kk * kk * kk / 2};
  return from_poly(times(to_poly(e), exp_kh));
}

ChernCharacterY3 ku_project(const ChernCharacterY3& e) {
  const ChernCharacterY3 o = ch_structure_sheaf();
  const ChernCharacterY3 oh = twist(o, 1);
  const ChernCharacterY3 e1 = e - euler_pairing(oh, e) * oh;
  return e1 - euler_pairing(o, e1) * o;
}

KuClass to_ku_basis(const ChernCharacterY3& e) {
  // n*alpha + m*beta has rank 2n+m and c1 = -n
  const Int n = neg64(e.c1);
  const Int m = sub64(e.r, mul64(2, n));
  const ChernCharacterY3 residual = e - from_ku_class({n, m});
  if (residual != ChernCharacterY3{})
    fail(ErrorCode::NotInKuSpan, to_string(e) + " is not in the span of alpha, beta; residual " + to_string(residual));
  return {n, m};
}

ChernCharacterY3 from_ku_class(KuClass v) { return v.n * ch_alpha() + v.m * ch_beta(); }

ChernCharacterY3 ideal_curve_character(Int d, Int g) {
  if (d < 1) fail(ErrorCode::PreconditionFailed, "curve degree must be positive");
  return ChernCharacterY3::make(1, 0, Rational(-d), Rational(add64(d, sub64(g, 1))));
}

KuClass hilbert_character(Int d, Int g, Int m) {
  return to_ku_basis(ku_project(twist(ideal_curve_character(d, g), m)));
}

}  // namespace kurank2
