#include "kurank2/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace kurank2 {

namespace {

std::string gldim_text(const GldimBound& b) { return (b.strict ? "< " : "= ") + to_string(b.value); }

FanoKuEntry cubic_like(FanoLabel label, std::string name) {
  FanoKuEntry e;
  e.label = label;
  e.name = std::move(name);
  e.basis = "(alpha, beta): alpha = [pr I_l(H)]-type class (2,-H,-L/2,P/2), beta = [I_l] (1,0,-L,0)";
  e.euler = {{-1, 0, -1, -1}};
  e.serre = {{1, 1, -1, 0}};
  e.serre_relation = "S^3=[5]";
  e.gldim = {Rational(2), true};
  e.base = {BaseKind::ChiThreshold, -1, "chi(v,v) = -1 (ideal sheaves of lines up to Serre and shift)", {{0, 1}}};
  e.family = Family::IPlus;
  return e;
}

FanoKuEntry quartic_double_solid_like(FanoLabel label, std::string name) {
  FanoKuEntry e;
  e.label = label;
  e.name = std::move(name);
  e.basis = "basis in which chi is symmetric, ((-1,-1),(-1,-2))";
  e.euler = {{-1, -1, -1, -2}};
  // a symmetric non-degenerate form forces D = identity
  e.serre = {Mat2::identity()};
  e.serre_relation = "S^2=[4]";
  e.serre_reconstructed = true;
  e.gldim = {Rational(2), false};
  e.base = {BaseKind::ChiThreshold, -2, "chi(v,v) >= -2", {}};
  e.notes.push_back("Serre matrix solved from chi(x,y) = chi(y,Dx); a symmetric form only admits D = identity, "
                    "so the I/J/K normal forms do not apply and no family is recorded");
  return e;
}

FanoKuEntry curve_entry(FanoLabel label, std::string name, int genus) {
  FanoKuEntry e;
  e.label = label;
  e.name = std::move(name);
  e.basis = "(rank, degree) on D^b(C), genus " + std::to_string(genus);
  const Int g1 = genus - 1;
  e.euler = {{-g1, 1, -1, 0}};
  e.serre = {{-1, 0, -2 * g1, -1}};
  e.serre_relation = "S = (-) tensor omega_C [1]";
  e.gldim = {Rational(1), false};
  e.base = {BaseKind::CurveRank, 0, "|rank| = 1 (line bundles, and their shifts)", {}};
  e.curve_genus = genus;
  return e;
}

FanoKuEntry kronecker_entry(FanoLabel label, std::string name) {
  FanoKuEntry e;
  e.label = label;
  e.name = std::move(name);
  e.basis = "classes of the two simple representations of the 3-Kronecker quiver";
  e.euler = {{1, -3, 0, 1}};
  e.serre = {{-8, 3, -3, 1}};
  e.serre_relation = "Serre functor of D^b(K3)";
  e.gldim = {Rational(1), false};
  e.base = {BaseKind::ChiThreshold, 0, "not applicable", {}};
  e.certifiable = false;
  e.notes.push_back("Ku(X) is equivalent to D^b of the Kronecker quiver with three arrows; the Euler form is not "
                    "negative semi-definite, so the inductive criterion is not used");
  return e;
}

std::vector<FanoKuEntry> build() {
  std::vector<FanoKuEntry> out;

  {
    FanoKuEntry e;
    e.label = {2, 1};
    e.name = "degree-1 del Pezzo threefold";
    e.basis = "right-hand oriented basis {x, Dx}, x maximizing Q(x,x)";
    e.euler = family_form(Family::IMinus, 1);
    e.serre = family_serre(Family::IMinus);
    e.serre_relation = "S^3=[7]";
    e.gldim = {Rational(5, 2), true};
    e.base = {BaseKind::ChiThreshold, -3,
              "chi(v,v) in {-1,-3}: chi = -3 classes are the Serre orbit of 1+H-3/2H^2-5/6P",
              {{1, 0}, {1, 1}}};
    e.family = Family::IMinus;
    out.push_back(e);
  }
  out.push_back(quartic_double_solid_like({2, 2}, "quartic double solid"));
  out.push_back(cubic_like({2, 3}, "cubic threefold"));
  out.push_back(curve_entry({2, 4}, "intersection of two quadrics", 2));
  out.push_back(kronecker_entry({2, 5}, "V5"));
  {
    auto e = quartic_double_solid_like({1, 10}, "Gushel-Mukai threefold");
    out.push_back(e);
  }
  out.push_back(curve_entry({1, 12}, "prime Fano threefold of genus 7", 7));
  {
    auto e = cubic_like({1, 14}, "prime Fano threefold of genus 8 (V14)");
    e.notes.push_back("Ku(V14) is equivalent to Ku of a cubic threefold");
    out.push_back(e);
  }
  out.push_back(curve_entry({1, 16}, "prime Fano threefold of genus 9", 3));
  out.push_back(curve_entry({1, 18}, "prime Fano threefold of genus 10", 2));
  out.push_back(kronecker_entry({1, 22}, "prime Fano threefold of genus 12"));
  for (auto& e : out) {
    e.notes.insert(e.notes.begin(), "gldim " + gldim_text(e.gldim));
  }
  return out;
}

}  // namespace

std::string to_string(FanoLabel l) { return "(" + std::to_string(l.index) + "," + std::to_string(l.degree) + ")"; }

FanoLabel parse_label(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "cubic" || s == "y3") return {2, 3};
  if (s == "v14") return {1, 14};
  if (s == "gm") return {1, 10};
  if (s == "v5") return {2, 5};
  if (s == "v22") return {1, 22};
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  auto comma = s.find_first_of(",:/");
  if (comma == std::string::npos) fail(ErrorCode::Parse, "cannot parse entry label '" + raw + "'");
  try {
    std::size_t used1 = 0, used2 = 0;
    int index = std::stoi(s.substr(0, comma), &used1);
    int degree = std::stoi(s.substr(comma + 1), &used2);
    if (used1 != comma || used2 != s.size() - comma - 1) throw std::invalid_argument("trailing");
    return {index, degree};
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "cannot parse entry label '" + raw + "'");
  }
}

const std::vector<FanoKuEntry>& catalog_entries() {
  static const std::vector<FanoKuEntry> entries = build();
  return entries;
}

const FanoKuEntry& lookup(int index, int degree) {
  for (const auto& e : catalog_entries())
    if (e.label.index == index && e.label.degree == degree) return e;
  if (index == 1 && degree <= 8)
    fail(ErrorCode::Uncovered, "index 1, degree " + std::to_string(degree) +
                                   ": the Kuznetsov component convention is floating for genus <= 5 and no "
                                   "Serre-invariant stability condition exists; not covered");
  fail(ErrorCode::Uncovered, "no catalog entry for " + to_string(FanoLabel{index, degree}));
}

Wide curve_pairing(Int g, LatticeVector v1, LatticeVector v2) {
  return sub(cross(v1, v2), mul(sub(g, 1), mul(v1.a, v2.a)));
}

bool in_base(const FanoKuEntry& entry, LatticeVector v) {
  if (norm_sq(v) == 1) return true;
  switch (entry.base.kind) {
    case BaseKind::ChiThreshold:
      return entry.euler.self(v) >= entry.base.chi_threshold;
    case BaseKind::CurveRank:
      return v.a == 1 || v.a == -1;
  }
  return false;
}

}  // namespace kurank2
