// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "kurank2/birgraph.hpp"
#include "kurank2/certifier.hpp"
#include "kurank2/chern.hpp"
#include "kurank2/cubic3.hpp"
#include "kurank2/euler_forms.hpp"
#include "kurank2/oracles.hpp"
#include "run.hpp"

using namespace kurank2;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    else detail += "; " + what;
    pass = false;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!v.pass) ++failures;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (v.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " [" << secs << "s]";
  if (!v.pass) os << " -- " << v.detail;
  std::cout << os.str() << std::endl;
}

std::string sym(KuClass v) { return to_symbolic(v); }

}  // namespace

int main() {
  criterion(1, "Euler table of alpha, beta, gamma and Chern characters round-trip", [] {
    Verdict v;
    const ChernCharacterY3 a = ch_alpha(), b = ch_beta(), c = ch_gamma();
    struct P {
      const ChernCharacterY3 *x, *y;
      Int want;
      const char* name;
    };
    const std::vector<P> table{{&a, &a, -1, "(a,a)"}, {&b, &a, -1, "(b,a)"}, {&c, &b, -1, "(g,b)"},
                               {&a, &b, 0, "(a,b)"},  {&b, &c, 0, "(b,g)"},  {&c, &a, 0, "(g,a)"},
                               {&a, &c, 1, "(a,g)"},  {&b, &b, -1, "(b,b)"}, {&c, &c, -1, "(g,g)"}};
    for (const P& p : table) v.require(euler_pairing(*p.x, *p.y) == p.want, std::string("chi") + p.name);
    v.require(to_string(a) == "(2, -H, -L/2, P/2)", "ch(alpha)");
    v.require(to_string(b) == "(1, 0, -L, 0)", "ch(beta)");
    v.require(to_string(c) == "(-1, H, -L/2, -P/2)", "ch(gamma)");
    v.require(to_ku_basis(a) == kAlpha && to_ku_basis(b) == kBeta && to_ku_basis(c) == kGamma, "to_ku_basis");
    v.require(from_ku_class(kAlpha) == a && from_ku_class(kBeta) == b && from_ku_class(kGamma) == c, "from_ku_class");
    return v;
  });

  criterion(2, "curve table reproduced by hilbert-map", [] {
    Verdict v;
    struct Row {
      Int d, g, m;
      const char* printed;
    };
    const std::vector<Row> rows{{1, 0, 0, "β"},     {2, 0, 1, "γ"},      {2, 0, 2, "-β"},    {3, 0, 1, "β+γ"},
                                {3, 1, 2, "0"},     {4, 0, 1, "2β+γ"},   {4, 0, 2, "-2α-β"}, {4, 0, 3, "α-2γ"},
                                {4, 1, 2, "-α"},    {5, 0, 3, "-2β-γ"},  {5, 1, 2, "-2α"},   {5, 1, 3, "-2γ"},
                                {5, 2, 2, "-γ"},    {6, 1, 2, "-3α"},    {6, 1, 3, "-3β"},   {7, 2, 3, "-α-3β"}};
    for (const Row& r : rows) {
      const std::string args = std::to_string(r.d) + " " + std::to_string(r.g) + " " + std::to_string(r.m);
      const kt::RunResult out = kt::kurank2("hilbert-map " + args);
      const std::string got = out.out.empty() ? "" : out.out.substr(0, out.out.size() - 1);
      v.require(out.status == 0 && got == r.printed,
                "(" + args + "): printed " + r.printed + ", computed " + got);
    }
    return v;
  });

  criterion(3, "pick_decompose = pick_oracle for norm <= 10^4", [] {
    Verdict v;
    const OracleReport r = oracle_pick(10000, 4);
    v.require(r.checked > 7000, "only " + std::to_string(r.checked) + " vectors");
    v.require(r.agree(), std::to_string(r.disagreements) + " disagreements");
    return v;
  });

  criterion(4, "normal forms of the catalog matrices and exceptional sets", [] {
    Verdict v;
    for (FanoLabel l : {FanoLabel{2, 3}, FanoLabel{1, 14}}) {
      const FanoKuEntry& e = lookup(l);
      const CanonicalForm f = classify_form(e.euler, e.serre);
      v.require(f.family == Family::IPlus && f.n == 1, to_string(l) + " is not I+ n=1");
    }
    {
      const FanoKuEntry& e = lookup(2, 1);
      const CanonicalForm f = classify_form(e.euler, e.serre);
      v.require(f.family == Family::IMinus && f.n == 1, "(2,1) is not I- n=1");
    }
    try {
      const FanoKuEntry& e = lookup(2, 2);
      const CanonicalForm f = classify_form(e.euler, e.serre);
      v.require(f.family == Family::JPlus || f.family == Family::JMinus, "(-1 -1; -1 -2) classified as " + to_string(f.family));
    } catch (const Error& err) {
      // a symmetric Euler form admits only D = identity
      v.require(false, std::string("(-1 -1; -1 -2) does not classify: ") + err.what());
    }
    const CanonicalForm ip{Family::IPlus, 1, Mat2::identity()}, im{Family::IMinus, 1, Mat2::identity()};
    const std::vector<LatticeVector> want_ip{{-1, -1}, {1, 1}};
    const std::vector<LatticeVector> want_im{{-2, 1}, {-1, -1}, {-1, 1}, {-1, 2}, {1, -2}, {1, -1}, {1, 1}, {2, -1}};
    v.require(exceptional_vectors(ip) == want_ip, "I+ exceptional set");
    v.require(exceptional_vectors(im) == want_im, "I- exceptional set");
    v.require(n_chi(ip) == 1, "N_chi(I+)");
    v.require(n_chi(im) == 3, "N_chi(I-)");
    return v;
  });

  criterion(5, "certify_all up to norm 2500 on every certifiable entry", [] {
    Verdict v;
    for (FanoLabel l : std::vector<FanoLabel>{{2, 3}, {2, 2}, {2, 1}, {1, 10}, {1, 14}, {2, 4}, {1, 16}, {1, 12}}) {
      const CertifyReport r = certify_all(lookup(l), 2500, 4);
      v.require(r.failures.empty() && r.verified == r.vectors && r.certified == r.vectors,
                to_string(l) + ": " + std::to_string(r.failures.size()) + " failures");
      v.require(r.all_splits_negative, to_string(l) + ": a split has chi(v+,v-) >= 0");
    }
    return v;
  });

  criterion(6, "cubic moduli dimensions", [] {
    Verdict v;
    v.require(moduli_dim(kBeta) == 2, "dim M(beta)");
    v.require(moduli_dim(kBeta + kGamma) == 4, "dim M(beta+gamma)");
    v.require(moduli_dim(2 * kBeta) == 5, "dim M(2beta)");
    v.require(moduli_dim(2 * kAlpha + kBeta) == 8, "dim M(2alpha+beta)");
    return v;
  });

  criterion(7, "stratification codimensions for 1 <= n,m <= 30", [] {
    Verdict v;
    for (Int n = 1; n <= 30; ++n)
      for (Int m = 1; m <= 30; ++m)
        for (const Stratum& s : strata({n, m})) {
          if (s.dominant) v.require(s.v1 == n * kAlpha && s.codim == 0, "dominant stratum of " + to_string(KuClass{n, m}));
          else v.require(s.codim >= 1, "stratum of " + to_string(KuClass{n, m}) + " has codim < 1");
        }
    const auto two = strata({2, 1});
    v.require(two.size() == 2 && two[0].codim == 1 && !two[0].dominant && two[1].codim == 0 && two[1].dominant,
              "(2,1) strata");
    return v;
  });

  criterion(8, "Fano fiber numerics for norm <= 10^4", [] {
    Verdict v;
    std::size_t checked = 0;
    for (Int n = 0; n <= 100; ++n)
      for (Int m = 0; m <= 100; ++m) {
        const KuClass c{n, m};
        if (n * n + m * m > 10000 || !is_primitive(c.vec()) || chi(c, c) >= -4) continue;
        const FanoFiberRecord r = fano_fiber_check(c);
        ++checked;
        v.require(r.chi_pm <= -2 && r.degree == -1, "fails at " + to_string(c));
      }
    v.require(checked > 2000, "too few classes");
    v.require(quiver_canonical_degree(0, 0, 1, 2).degree == -1, "(t,r)=(1,2)");
    for (Int t = 0; t <= 5; ++t)
      for (Int r = 2; r <= 6; ++r) v.require(quiver_canonical_degree(0, 0, t, r).degree == t - r, "t - r");
    return v;
  });

  criterion(9, "phase/chi sign law for coordinates <= 20, offsets -2..2", [] {
    Verdict v;
    std::size_t pairs = 0, bad = 0;
    for (Int n1 = -20; n1 <= 20; ++n1)
      for (Int m1 = -20; m1 <= 20; ++m1) {
        if (n1 == 0 && m1 == 0) continue;
        const LiftedClass lv = LiftedClass::principal({n1, m1});
        for (Int n2 = -20; n2 <= 20; ++n2)
          for (Int m2 = -20; m2 <= 20; ++m2) {
            if (n2 == 0 && m2 == 0) continue;
            const LiftedClass base = LiftedClass::principal({n2, m2});
            for (Int k = -2; k <= 2; ++k) {
              const LiftedClass lw = base.shift(k);
              const GapClass g = phase_gap_class(lv, lw);
              if (!g.inside(-3, 3)) continue;
              ++pairs;
              const Wide c = chi(lv.cls(), lw.cls());
              if ((c < 0) != g.inside(-2, 1) || (c == 0) != (g.equals(-2) || g.equals(1))) ++bad;
            }
          }
      }
    v.require(bad == 0, std::to_string(bad) + " of " + std::to_string(pairs) + " pairs violate the law");
    return v;
  });

  criterion(10, "birationality graph: connectivity, prime witnesses, chi threshold", [] {
    Verdict v;
    const Connectivity c = check_connected(200);
    v.require(c.connected, "graph at 200 not connected");
    v.require(c.spanning_tree.size() + 1 == build_graph(200).nodes.size(), "spanning tree size");
    for (const BirEdge& e : c.spanning_tree) v.require(edge_valid(e), "invalid tree edge");
    for (Int m = 6; m <= 500; ++m) {
      if (m == 8) continue;
      const auto [p, q] = prime_witness(m);
      v.require(in_S(p) && in_S(q) && edge_valid({p, q, EdgeRule::ShiftMinusTwo}), "witness m=" + std::to_string(m));
    }
    for (Int s = 2; s <= 200; ++s)
      for (Int b = 1; 2 * b < s; ++b) {
        const Int a = s - b;
        if (std::gcd(a, b) != 1) continue;
        v.require((s >= 6) == (chi({a, b}, {a, b}) < -22), "threshold at " + to_string(SPoint{a, b}));
      }
    return v;
  });

  criterion(11, "Abel-Jacobi fibers of curves of degree 3m^2/2+3m/2+1", [] {
    Verdict v;
    for (Int m = 0; m <= 6; ++m) {
      const Int d = (3 * m * m + 3 * m) / 2 + 1, g = m * m * m - m;
      const KuClass c = hilbert_character(d, g, m);
      v.require(c == (m + 1) * kBeta + m * kGamma, "class at m=" + std::to_string(m) + " is " + sym(c));
      v.require(moduli_dim(c) == 2 * d, "dimension at m=" + std::to_string(m));
    }
    return v;
  });

  criterion(12, "CLI output is byte-identical across runs and thread counts", [] {
    Verdict v;
    const std::vector<std::string> cmds{
        "pairing a g", "pick 3 2", "classify-form --matrix -1,0,-1,-1 --serre 1,1,-1,0 --exceptional", "catalog",
        "certify cubic 7 3", "certify-all 2,1 --norm-bound 2500", "moduli-info 1 2", "strata 5 3",
        "fano-check 5 4", "phase-gap a g", "ext-locus a b", "hilbert-map --table", "birgraph --sum-bound 40",
        "render-lattice --window -5,5,-5,5", "oracle --suite pick --bound 5000", "oracle --suite triangle",
        "oracle --suite exceptional", "oracle --suite tree --bound 80"};
    for (const std::string& cmd : cmds) {
      const kt::RunResult a = kt::kurank2("--threads 1 " + cmd);
      const kt::RunResult b = kt::kurank2("--threads 1 " + cmd);
      const kt::RunResult c = kt::kurank2("--threads 8 " + cmd);
      v.require(a.status == 0, cmd + " exited " + std::to_string(a.status));
      v.require(!a.out.empty() && a.out == b.out && a.out == c.out, cmd + " output differs");
    }
    return v;
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
