#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kurank2/ku_class.hpp"

namespace kurank2 {

// chi(n1 a + m1 b, n2 a + m2 b) = -n1 n2 - m1 n2 - m1 m2
Wide chi(KuClass v, KuClass w);

// D: beta -> alpha, alpha -> alpha - beta
KuClass serre_act(KuClass v);
// R = D^-1, rotation by pi/3: alpha -> beta -> gamma
KuClass rotate(KuClass v);

// Sextant s is the half-open cone from R^s(alpha) to R^{s+1}(alpha),
// i.e. phases [s/3, (s+1)/3).
int sextant_index(KuClass v);

struct SextantNormal {
  KuClass cls;  // in {n >= 1, m >= 0} or {(0,m): m >= 1}
  int k = 0;    // cls = sign * D^k(v)
  int sign = 1;
};

SextantNormal sextant_normalize(KuClass v);

// A class with a phase band: branch k means phase in [k/3, (k+1)/3).
class LiftedClass {
 public:
  static LiftedClass principal(KuClass cls);
  static LiftedClass make(KuClass cls, Int branch);

  KuClass cls() const { return cls_; }
  Int branch() const { return branch_; }
  // [n]: (cls, k) -> ((-1)^n cls, k + 3n)
  LiftedClass shift(Int n) const;
  // lifted Serre functor: phase grows by 5/3
  LiftedClass serre() const;
  LiftedClass rotate() const;

  friend bool operator==(const LiftedClass&, const LiftedClass&) = default;

 private:
  LiftedClass(KuClass cls, Int branch) : cls_(cls), branch_(branch) {}
  KuClass cls_;
  Int branch_;
};

// phi(w) - phi(v) is thirds/3 when exact, else inside (thirds/3, (thirds+1)/3)
struct GapClass {
  Int thirds = 0;
  bool exact = true;

  // the gap lies in the open interval (lo/3, hi/3)
  bool inside(Int lo, Int hi) const {
    return exact ? (lo < thirds && thirds < hi) : (lo <= thirds && thirds + 1 <= hi);
  }
  bool equals(Int t) const { return exact && thirds == t; }
  friend bool operator==(const GapClass&, const GapClass&) = default;
};

std::string to_string(const GapClass& g);

GapClass phase_gap_class(const LiftedClass& v, const LiftedClass& w);

Wide moduli_dim(KuClass v);

struct Stratum {
  KuClass v1;
  KuClass v2;
  Wide codim = 0;
  bool dominant = false;
};

std::vector<Stratum> strata(KuClass v);

// M(m beta) = E(alpha, (m-1) beta + gamma); chi(v1, v2) = +1 here, so the
// projectivized extension space has positive-dimensional fibers
struct BetaStratum {
  KuClass v1;
  KuClass v2;
  Wide chi_v1_v2 = 0;
};

BetaStratum strata_beta(Int m);

struct ExtLocus {
  Wide codim = 0;
  bool valid = false;      // phase gap of the lifts lies in (0,1)
  bool small_gap = false;  // phase gap in (0,1/3)
  std::vector<std::string> reasons;
};

ExtLocus ext_locus_codim(KuClass v, KuClass w);

Wide proj_ext_dim(KuClass v, KuClass w);

struct QuiverDegree {
  Int degree = 0;  // canonical bundle restricted to Z is O_Z(degree)
  Int z_dim = 0;   // Z = P^{a21 - 1}
};

QuiverDegree quiver_canonical_degree(Int a11, Int a22, Int a12, Int a21);

struct FanoFiberRecord {
  LatticeVector v_minus;
  LatticeVector v_plus;
  Wide chi_pm = 0;
  Wide chi_mp = 0;
  Wide degree = 0;
  Wide r = 0;
  bool passes = false;
};

FanoFiberRecord fano_fiber_check(KuClass v);

struct ModuliInfo {
  KuClass cls;
  Wide dim = 0;
  bool primitive = false;
  SextantNormal normal;
  Wide chi_self = 0;
  std::optional<Int> b1;
  std::optional<Int> b2;
  std::optional<Wide> aj_fiber_dim;
  std::optional<FanoFiberRecord> fano_fiber;
  std::optional<std::string> mrc_quotient;
  std::vector<std::string> labels;
};

ModuliInfo moduli_info(KuClass v);

}  // namespace kurank2
