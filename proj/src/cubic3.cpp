#include "kurank2/cubic3.hpp"

#include "kurank2/lattice.hpp"

namespace kurank2 {

namespace {

const Mat2 kSerre{1, 1, -1, 0};
const Mat2 kRotation{0, -1, 1, 1};

void require_nonzero(KuClass v) {
  if (v.zero()) fail(ErrorCode::ZeroClass, "class must be nonzero");
}

bool in_first_sextant(KuClass v) { return v.n >= 1 && v.m >= 0; }

bool canonical(KuClass v) { return in_first_sextant(v) || (v.n == 0 && v.m >= 1); }

}  // namespace

Wide chi(KuClass v, KuClass w) {
  return sub(sub(sub(0, mul(v.n, w.n)), mul(v.m, w.n)), mul(v.m, w.m));
}

KuClass serre_act(KuClass v) { return KuClass::of(kSerre(v.vec())); }
KuClass rotate(KuClass v) { return KuClass::of(kRotation(v.vec())); }

int sextant_index(KuClass v) {
  require_nonzero(v);
  KuClass u = v;
  for (int s = 0; s < 6; ++s) {
    if (in_first_sextant(u)) return s;
    u = serre_act(u);
  }
  fail(ErrorCode::InternalInvariant, "no sextant contains " + to_string(v));
}

SextantNormal sextant_normalize(KuClass v) {
  require_nonzero(v);
  KuClass u = v;
  for (int k = 0; k < 6; ++k) {
    if (canonical(u)) return {u, k, 1};
    if (canonical(-u)) return {-u, k, -1};
    u = serre_act(u);
  }
  fail(ErrorCode::InternalInvariant, "no normal form for " + to_string(v));
}

LiftedClass LiftedClass::principal(KuClass cls) { return {cls, sextant_index(cls)}; }

LiftedClass LiftedClass::make(KuClass cls, Int branch) {
  const Int s = sextant_index(cls);
  const Int r = ((branch % 6) + 6) % 6;
  if (r != s)
    fail(ErrorCode::InvalidBranch, "branch " + std::to_string(branch) + " is not congruent to sextant " +
                                       std::to_string(s) + " of " + to_string(cls));
  return {cls, branch};
}

LiftedClass LiftedClass::shift(Int n) const {
  return {(n % 2 == 0) ? cls_ : -cls_, add64(branch_, mul64(3, n))};
}

LiftedClass LiftedClass::serre() const { return {serre_act(cls_), add64(branch_, 5)}; }

LiftedClass LiftedClass::rotate() const { return {kurank2::rotate(cls_), add64(branch_, 1)}; }

std::string to_string(const GapClass& g) {
  auto third = [](Int t) {
    if (t == 0) return std::string("0");
    if (t % 3 == 0) return std::to_string(t / 3);
    return std::to_string(t) + "/3";
  };
  if (g.exact) return third(g.thirds);
  return "(" + third(g.thirds) + ", " + third(g.thirds + 1) + ")";
}

GapClass phase_gap_class(const LiftedClass& v, const LiftedClass& w) {
  const int sv = sextant_index(v.cls()), sw = sextant_index(w.cls());
  // rotate both back into sextant 0; the angle inside a sextant is ordered
  // by the cross product since R is an honest rotation in the hexagonal plane
  const LatticeVector v0 = kSerre.pow(sv)(v.cls().vec());
  const LatticeVector w0 = kSerre.pow(sw)(w.cls().vec());
  const Int t = sub64(w.branch(), v.branch());
  const Wide c = cross(v0, w0);
  if (c == 0) return {t, true};
  if (c > 0) return {t, false};
  return {sub64(t, 1), false};
}

Wide moduli_dim(KuClass v) {
  require_nonzero(v);
  return sub(1, chi(v, v));
}

std::vector<Stratum> strata(KuClass v) {
  if (v.n < 1 || v.m < 1)
    fail(ErrorCode::OutOfSextant, "strata need n >= 1 and m >= 1, got " + to_string(v));
  std::vector<Stratum> out;
  for (Int i = 0; i <= v.n; ++i) {
    for (Int j = 0; j <= v.m; ++j) {
      if (mul(j, v.n) >= mul(i, v.m)) continue;
      Stratum s{{i, j}, {v.n - i, v.m - j}, 0, i == v.n && j == 0};
      s.codim = -chi(s.v1, s.v2);
      if (s.dominant && s.codim != 0) fail(ErrorCode::InternalInvariant, "dominant stratum has nonzero codimension");
      out.push_back(s);
    }
  }
  return out;
}

BetaStratum strata_beta(Int m) {
  if (m < 1) fail(ErrorCode::PreconditionFailed, "m must be positive");
  BetaStratum s{kAlpha, sub64(m, 1) * kBeta + kGamma, 0};
  s.chi_v1_v2 = chi(s.v1, s.v2);
  return s;
}

ExtLocus ext_locus_codim(KuClass v, KuClass w) {
  require_nonzero(v);
  require_nonzero(w);
  ExtLocus out;
  out.codim = -chi(v, w);
  // some lift of w sits at phase gap in (0,1) above v exactly when w is
  // strictly counterclockwise of v by less than pi
  const Wide c = cross(v.vec(), w.vec());
  out.valid = c > 0;
  if (!out.valid) out.reasons.push_back(c == 0 ? "v and w are parallel" : "no lift has phase gap in (0,1)");
  if (out.valid) {
    LiftedClass lv = LiftedClass::principal(v);
    LiftedClass lw = LiftedClass::principal(w);
    GapClass g = phase_gap_class(lv, lw);
    while (!g.inside(0, 3)) {
      lw = lw.shift(2);
      g = phase_gap_class(lv, lw);
      if (g.thirds > 6) fail(ErrorCode::InternalInvariant, "phase gap search did not terminate");
    }
    out.small_gap = g.inside(0, 1);
    out.reasons.push_back("phase gap " + to_string(g));
  }
  return out;
}

Wide proj_ext_dim(KuClass v, KuClass w) {
  const Wide value = sub(sub(add(moduli_dim(v), moduli_dim(w)), chi(w, v)), 1);
  const KuClass s = v + w;
  const Wide check = add(sub(1, chi(s, s)), chi(v, w));
  if (value != check) fail(ErrorCode::InternalInvariant, "projectivized Ext dimension identity failed");
  return value;
}

QuiverDegree quiver_canonical_degree(Int a11, Int a22, Int a12, Int a21) {
  if (a11 < 0 || a22 < 0 || a12 < 0 || a21 < 0)
    fail(ErrorCode::PreconditionFailed, "arrow counts must be nonnegative");
  if (a21 < 2) fail(ErrorCode::TooFewArrows, "need at least two arrows from vertex 2 to vertex 1");
  return {sub64(a12, a21), a21 - 1};
}

FanoFiberRecord fano_fiber_check(KuClass v) {
  if (!is_primitive(v.vec())) fail(ErrorCode::PreconditionFailed, to_string(v) + " is not primitive");
  if (!canonical(v)) fail(ErrorCode::PreconditionFailed, to_string(v) + " is not in the canonical sextant");
  if (chi(v, v) >= -4) fail(ErrorCode::PreconditionFailed, "chi(v,v) must be below -4");
  const PickPair p = pick_decompose(v.vec());
  FanoFiberRecord out;
  out.v_minus = p.minus;
  out.v_plus = p.plus;
  out.chi_pm = chi(KuClass::of(p.plus), KuClass::of(p.minus));
  out.chi_mp = chi(KuClass::of(p.minus), KuClass::of(p.plus));
  out.r = -out.chi_pm;
  out.degree = sub(out.chi_pm, out.chi_mp);
  out.passes = out.chi_pm <= -2 && out.degree == -1;
  return out;
}

ModuliInfo moduli_info(KuClass v) {
  require_nonzero(v);
  ModuliInfo info;
  info.cls = v;
  info.dim = moduli_dim(v);
  info.primitive = is_primitive(v.vec());
  info.normal = sextant_normalize(v);
  info.chi_self = chi(v, v);
  const KuClass u = info.normal.cls;
  if (u == kAlpha || u == kBeta) info.labels.push_back("Fano surface of lines F(Y3)");
  if (u == KuClass{1, 1}) info.labels.push_back("Bl_p Theta: blowup of the theta divisor at its singular point");
  if (u == KuClass{2, 0} || u == KuClass{0, 2}) {
    info.labels.push_back("Bl_{F(Y3)} J(Y3)");
    info.labels.push_back("Abel-Jacobi map is birational");
  }
  if (info.chi_self <= -4) info.labels.push_back("Abel-Jacobi map surjective with connected fibers");
  if (info.primitive && info.chi_self == -7)
    info.labels.push_back("general Abel-Jacobi fiber is an index-1 genus-8 Fano threefold (V14)");
  if (info.primitive && info.chi_self < -4) {
    info.b1 = 10;
    info.b2 = 46;
    info.aj_fiber_dim = sub(info.dim, 5);
    info.mrc_quotient = "intermediate Jacobian J(Y3)";
    if (canonical(v)) info.fano_fiber = fano_fiber_check(v);
    else info.fano_fiber = fano_fiber_check(u);
  }
  return info;
}

}  // namespace kurank2
