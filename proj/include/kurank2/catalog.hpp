#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kurank2/euler_forms.hpp"

namespace kurank2 {

inline constexpr int kCatalogVersion = 1;

struct FanoLabel {
  int index = 0;
  int degree = 0;
  friend bool operator==(const FanoLabel&, const FanoLabel&) = default;
};

std::string to_string(FanoLabel l);
// "2,3" or "(2,3)" or aliases such as "cubic", "V14", "GM"
FanoLabel parse_label(const std::string& s);

struct GldimBound {
  Rational value;
  bool strict = false;  // gldim < value when strict, gldim = value otherwise
};

enum class BaseKind { ChiThreshold, CurveRank };

// S0: unit vectors, plus either chi(v,v) >= chi_threshold or |rank| = 1.
struct BasePredicate {
  BaseKind kind = BaseKind::ChiThreshold;
  Int chi_threshold = 0;
  std::string description;
  // base classes whose Serre orbit is recorded as justified by the seed
  std::vector<LatticeVector> serre_seeds;
};

struct FanoKuEntry {
  FanoLabel label;
  std::string name;
  std::string basis;
  EulerForm euler;
  SerreIsometry serre;
  std::string serre_relation;
  GldimBound gldim;
  BasePredicate base;
  std::optional<Family> family;
  std::optional<int> curve_genus;
  bool certifiable = true;
  bool serre_reconstructed = false;
  std::vector<std::string> notes;
};

const std::vector<FanoKuEntry>& catalog_entries();
const FanoKuEntry& lookup(int index, int degree);
inline const FanoKuEntry& lookup(FanoLabel l) { return lookup(l.index, l.degree); }

// chi on D^b(C) for a genus-g curve, vectors as (rank, degree)
Wide curve_pairing(Int g, LatticeVector v1, LatticeVector v2);

bool in_base(const FanoKuEntry& entry, LatticeVector v);

}  // namespace kurank2
