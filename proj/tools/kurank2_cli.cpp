// kurank2: command-line front end for the rank-2 Kuznetsov lattice library.
//
// Exit codes: 0 ok, 2 usage (including unparseable classes), 3 domain error,
// 4 internal error. Errors go to stderr as one JSON object per line.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kurank2/birgraph.hpp"
#include "kurank2/catalog.hpp"
#include "kurank2/certifier.hpp"
#include "kurank2/chern.hpp"
#include "kurank2/class_parser.hpp"
#include "kurank2/cubic3.hpp"
#include "kurank2/euler_forms.hpp"
#include "kurank2/format.hpp"
#include "kurank2/oracles.hpp"
#include "kurank2/render.hpp"

using namespace kurank2;

namespace {

enum Exit { kOk = 0, kUsage = 2, kDomain = 3, kInternal = 4 };

// one class from either "n m" or a single symbolic / "n,m" token
KuClass class_from_args(const std::vector<std::string>& args) {
  if (args.size() == 1) return parse_class(args[0]);
  if (args.size() == 2) return parse_class(args[0] + "," + args[1]);
  fail(ErrorCode::Parse, "expected a class as '<n> <m>' or a symbolic form such as 2a+b");
}

Mat2 matrix_from(const std::vector<Int>& xs, const char* what) {
  if (xs.size() != 4) fail(ErrorCode::Parse, std::string(what) + " needs four comma-separated integers");
  return {xs[0], xs[1], xs[2], xs[3]};
}

void print(const Json& j, const std::string& format) {
  if (format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << render_text(j);
}

void report_error(const std::string& code, const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = code;
  j["kind"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice computations for rank-2 Kuznetsov components of Fano threefolds"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for exhaustive runs")->check(CLI::Range(1u, 256u));

  std::string format = "text";
  auto add_format = [&format](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
  };

  // pairing
  auto* pairing = app.add_subcommand("pairing", "Euler pairing chi(v,w) on Ku(Y3)");
  std::string pv, pw;
  pairing->add_option("v", pv, "class, e.g. 2a+b or 1,2")->required();
  pairing->add_option("w", pw, "class")->required();
  add_format(pairing, {"text", "json"});

  // pick
  auto* pick = app.add_subcommand("pick", "Pick decomposition v = v- + v+ and sin^2(pi*delta)");
  Int pa = 0, pb = 0;
  pick->add_option("a", pa)->required();
  pick->add_option("b", pb)->required();
  add_format(pick, {"text", "json"});

  // classify-form
  auto* classify = app.add_subcommand("classify-form", "Normal form of an Euler form with Serre isometry");
  std::vector<Int> qm, dm;
  classify->add_option("--matrix", qm, "q11,q12,q21,q22")->required()->delimiter(',');
  classify->add_option("--serre", dm, "d11,d12,d21,d22")->required()->delimiter(',');
  bool with_exceptional = false;
  classify->add_flag("--exceptional", with_exceptional, "also list exceptional vectors and N_chi");
  add_format(classify, {"text", "json"});

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Dump the Fano lattice catalog or one entry");
  std::string catalog_entry;
  catalog->add_option("entry", catalog_entry, "e.g. 2,3 or cubic");
  add_format(catalog, {"text", "json"});

  // certify
  auto* cert = app.add_subcommand("certify", "Non-emptiness certificate for one vector");
  std::string cert_entry;
  Int ca = 0, cb = 0;
  cert->add_option("entry", cert_entry)->required();
  cert->add_option("a", ca)->required();
  cert->add_option("b", cb)->required();
  add_format(cert, {"text", "dot", "json"});

  // certify-all
  auto* cert_all = app.add_subcommand("certify-all", "Certify every primitive vector up to a norm bound");
  std::string all_entry;
  Int norm_bound = 2500;
  cert_all->add_option("entry", all_entry)->required();
  cert_all->add_option("--norm-bound", norm_bound)->check(CLI::Range(Int{1}, Int{1} << 40));
  add_format(cert_all, {"text", "json"});

  // moduli-info, strata, fano-check
  auto* info = app.add_subcommand("moduli-info", "Dimension, Betti numbers and identifications for M(v)");
  std::vector<std::string> info_args;
  info->add_option("class", info_args, "<n> <m> or symbolic")->required()->expected(1, 2);
  add_format(info, {"text", "json"});

  auto* strata_cmd = app.add_subcommand("strata", "Extension strata of M(n alpha + m beta)");
  std::vector<std::string> strata_args;
  Int beta_m = 0;
  strata_cmd->add_option("class", strata_args, "<n> <m> or symbolic")->expected(1, 2);
  strata_cmd->add_option("--beta", beta_m, "the m*beta case");
  add_format(strata_cmd, {"text", "json"});

  auto* fano = app.add_subcommand("fano-check", "Fano-fiber numerics for a primitive class");
  std::vector<std::string> fano_args;
  fano->add_option("class", fano_args, "<n> <m> or symbolic")->required()->expected(1, 2);
  add_format(fano, {"text", "json"});

  // phase-gap and ext-locus
  auto* gap = app.add_subcommand("phase-gap", "Exact class of phi(w) - phi(v) and the sign of chi(v,w)");
  std::string gv, gw;
  Int branch_v = 0, branch_w = 0;
  gap->add_option("v", gv)->required();
  gap->add_option("w", gw)->required();
  auto* bv = gap->add_option("--branch-v", branch_v, "phase band of v (default: its sextant)");
  auto* bw = gap->add_option("--branch-w", branch_w, "phase band of w (default: its sextant)");
  add_format(gap, {"text", "json"});

  auto* ext = app.add_subcommand("ext-locus", "Codimension of the extension locus E(v,w)");
  std::string ev, ew;
  ext->add_option("v", ev)->required();
  ext->add_option("w", ew)->required();
  add_format(ext, {"text", "json"});

  // hilbert-map
  auto* hilbert = app.add_subcommand("hilbert-map", "Class of pr(I_C(mH)) for a curve of degree d, genus g");
  std::vector<Int> dgm;
  bool table = false;
  hilbert->add_option("dgm", dgm, "<d> <g> <m>")->expected(3);
  hilbert->add_flag("--table", table, "recompute the small-degree table");
  add_format(hilbert, {"text", "json"});

  // birgraph
  auto* bir = app.add_subcommand("birgraph", "Stable-birationality graph on primitive classes");
  Int sum_bound = 9;
  bir->add_option("--sum-bound", sum_bound)->check(CLI::Range(Int{1}, Int{2000}));
  std::vector<Int> path_from, path_to;
  bir->add_option("--path-from", path_from, "a,b")->delimiter(',')->expected(2);
  bir->add_option("--path-to", path_to, "c,d")->delimiter(',')->expected(2);
  format = "dot";
  bir->add_option("--format", format, "output format")->check(CLI::IsMember({"dot", "json", "text"}));

  // render-lattice
  auto* render = app.add_subcommand("render-lattice", "SVG picture of the lattice (hexagonal by default)");
  std::vector<Int> window{-4, 4, -4, 4};
  std::string mode = "hexagonal";
  bool no_labels = false;
  render->add_option("--window", window, "n_min,n_max,m_min,m_max")->delimiter(',')->expected(4);
  render->add_option("--mode", mode)->check(CLI::IsMember({"hexagonal", "euclidean"}));
  render->add_flag("--no-labels", no_labels);
  std::string render_format = "svg";
  render->add_option("--format", render_format)->check(CLI::IsMember({"svg"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Run a brute-force cross-check suite");
  std::string suite;
  Int oracle_bound = 0;
  oracle->add_option("--suite", suite)->required()->check(CLI::IsMember({"pick", "triangle", "exceptional", "tree"}));
  oracle->add_option("--bound", oracle_bound, "suite-specific size (defaults: 10000, 4, 400, 100)");
  add_format(oracle, {"text", "json"});

  // birgraph defaults to dot; every other subcommand to text
  for (auto* sub : app.get_subcommands({})) {
    if (sub != bir) sub->preparse_callback([&format](std::size_t) { format = "text"; });
  }
  bir->preparse_callback([&format](std::size_t) { format = "dot"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("Usage", "usage", e.what());
    return kUsage;
  }

  try {
    if (*pairing) {
      const KuClass v = parse_class(pv), w = parse_class(pw);
      Json j = envelope("pairing");
      j["v"] = to_json(v);
      j["w"] = to_json(w);
      j["chi"] = wide_json(chi(v, w));
      j["chi_hrr"] = euler_pairing(from_ku_class(v), from_ku_class(w));
      if (format == "json") print(j, format);
      else std::cout << "chi(" << to_symbolic(v) << ", " << to_symbolic(w) << ") = " << to_string(chi(v, w)) << "\n";
    } else if (*pick) {
      const LatticeVector v{pa, pb};
      const PickPair p = pick_decompose(v);
      const Rational d = delta_sin_sq(v);
      if (format == "json") {
        Json j = envelope("pick");
        j["v"] = to_json(v);
        j["v_minus"] = to_json(p.minus);
        j["v_plus"] = to_json(p.plus);
        j["delta_sin_sq"] = rational_json(d);
        print(j, format);
      } else {
        std::cout << "v- = " << to_string(p.minus) << ", v+ = " << to_string(p.plus) << "\n";
        std::cout << "sin^2(pi*delta) = " << to_string(d) << "\n";
      }
    } else if (*classify) {
      const EulerForm q{matrix_from(qm, "--matrix")};
      const SerreIsometry s{matrix_from(dm, "--serre")};
      const CanonicalForm f = classify_form(q, s);
      Json j = to_json(f);
      if (with_exceptional) {
        j["exceptional_vectors"] = Json::array();
        for (auto v : exceptional_vectors(f)) j["exceptional_vectors"].push_back(to_json(v));
        j["n_chi"] = n_chi(f);
      }
      print(j, format);
    } else if (*catalog) {
      if (catalog_entry.empty()) {
        print(catalog_json(), format);
      } else {
        Json j = envelope("catalog-entry");
        j["entry"] = to_json(lookup(parse_label(catalog_entry)));
        print(j, format);
      }
    } else if (*cert) {
      const FanoKuEntry& e = lookup(parse_label(cert_entry));
      const Certificate c = certify(e, {ca, cb});
      const VerifyResult ok = verify(c, e);
      if (!ok) fail(ErrorCode::InternalInvariant, "certificate failed verification: " + ok.failure);
      if (format == "dot") std::cout << certificate_dot(c);
      else if (format == "json") std::cout << to_json(c).dump(2) << "\n";
      else std::cout << certificate_text(c);
    } else if (*cert_all) {
      const FanoKuEntry& e = lookup(parse_label(all_entry));
      const CertifyReport r = certify_all(e, norm_bound, threads);
      print(to_json(r), format);
      if (!r.failures.empty()) return kDomain;
    } else if (*info) {
      print(to_json(moduli_info(class_from_args(info_args))), format);
    } else if (*strata_cmd) {
      Json j = envelope("strata");
      if (beta_m != 0) {
        const BetaStratum s = strata_beta(beta_m);
        j["class"] = to_json(beta_m * kBeta);
        j["v1"] = to_json(s.v1);
        j["v2"] = to_json(s.v2);
        j["chi_v1_v2"] = wide_json(s.chi_v1_v2);
        j["note"] = "chi(v1,v2) > 0: the extension space maps with positive-dimensional fibers";
      } else {
        const KuClass v = class_from_args(strata_args);
        j["class"] = to_json(v);
        j["strata"] = Json::array();
        for (const auto& s : strata(v)) j["strata"].push_back(to_json(s));
      }
      print(j, format);
    } else if (*fano) {
      Json j = envelope("fano-check");
      const KuClass v = class_from_args(fano_args);
      j["class"] = to_json(v);
      j["record"] = to_json(fano_fiber_check(v));
      print(j, format);
    } else if (*gap) {
      const KuClass v = parse_class(gv), w = parse_class(gw);
      const LiftedClass lv = bv->count() ? LiftedClass::make(v, branch_v) : LiftedClass::principal(v);
      const LiftedClass lw = bw->count() ? LiftedClass::make(w, branch_w) : LiftedClass::principal(w);
      const GapClass g = phase_gap_class(lv, lw);
      Json j = envelope("phase-gap");
      j["v"] = to_json(v);
      j["branch_v"] = lv.branch();
      j["w"] = to_json(w);
      j["branch_w"] = lw.branch();
      j["gap"] = to_string(g);
      j["exact"] = g.exact;
      j["chi"] = wide_json(chi(v, w));
      j["in_negative_window"] = g.inside(-2, 1);
      print(j, format);
    } else if (*ext) {
      print(to_json(ext_locus_codim(parse_class(ev), parse_class(ew))), format);
    } else if (*hilbert) {
      if (table) {
        if (format == "json") {
          Json j = envelope("hilbert-table");
          j["rows"] = Json::array();
          for (const auto& r : hilbert_table_rows())
            j["rows"].push_back({{"d", r.d}, {"g", r.g}, {"m", r.m}, {"v", to_json(hilbert_character(r.d, r.g, r.m))}});
          print(j, format);
        } else {
          std::cout << hilbert_table_text();
        }
      } else {
        if (dgm.size() != 3) fail(ErrorCode::Parse, "hilbert-map needs <d> <g> <m> or --table");
        const KuClass v = hilbert_character(dgm[0], dgm[1], dgm[2]);
        if (format == "json") {
          Json j = envelope("hilbert-map");
          j["d"] = dgm[0];
          j["g"] = dgm[1];
          j["m"] = dgm[2];
          j["v"] = to_json(v);
          print(j, format);
        } else {
          std::cout << to_symbolic(v) << "\n";
        }
      }
    } else if (*bir) {
      if (!path_from.empty() || !path_to.empty()) {
        if (path_from.size() != 2 || path_to.size() != 2) fail(ErrorCode::Parse, "--path-from and --path-to go together");
        const auto path = equivalence_path({path_from[0], path_from[1]}, {path_to[0], path_to[1]}, sum_bound);
        Json j = envelope("birgraph-path");
        j["edges"] = Json::array();
        for (const auto& e : path) j["edges"].push_back(to_json(e));
        print(j, format == "json" ? "json" : "text");
      } else {
        const BirGraph g = build_graph(sum_bound);
        if (format == "dot") {
          std::cout << birgraph_dot(g);
        } else if (format == "json") {
          Json j = to_json(g);
          const Connectivity c = check_connected(sum_bound);
          j["connected"] = c.connected;
          j["spanning_tree"] = Json::array();
          for (const auto& e : c.spanning_tree) j["spanning_tree"].push_back(to_json(e));
          std::cout << j.dump(2) << "\n";
        } else {
          const Connectivity c = check_connected(sum_bound);
          Json j = envelope("birgraph-summary");
          j["sum_bound"] = sum_bound;
          j["nodes"] = g.nodes.size();
          j["edges"] = g.edges.size();
          j["connected"] = c.connected;
          j["spanning_tree_edges"] = c.spanning_tree.size();
          print(j, "text");
        }
      }
    } else if (*render) {
      RenderSpec spec;
      spec.mode = mode == "euclidean" ? CoordinateMode::Euclidean : CoordinateMode::Hexagonal;
      spec.n_min = window[0];
      spec.n_max = window[1];
      spec.m_min = window[2];
      spec.m_max = window[3];
      spec.annotate = !no_labels;
      std::cout << render_lattice_svg(spec);
    } else if (*oracle) {
      OracleReport r;
      if (suite == "pick") r = oracle_pick(oracle_bound ? oracle_bound : 10000, threads);
      else if (suite == "triangle") r = oracle_triangle(oracle_bound ? oracle_bound : 4, 50, threads);
      else if (suite == "exceptional") r = oracle_exceptional(oracle_bound ? oracle_bound : 400);
      else r = oracle_tree(oracle_bound ? oracle_bound : 100, 500);
      Json j = envelope("oracle");
      j["suite"] = r.suite;
      j["checked"] = r.checked;
      j["disagreements"] = r.disagreements;
      j["agree"] = r.agree();
      j["details"] = r.details;
      print(j, format);
      if (!r.agree()) return kInternal;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) {
      report_error("Parse", "usage", e.what());
      return kUsage;
    }
    report_error(std::string(to_string(e.code())), e.internal() ? "internal" : "domain", e.what());
    return e.internal() ? kInternal : kDomain;
  } catch (const std::exception& e) {
    report_error("Internal", "internal", e.what());
    return kInternal;
  }
  return kOk;
}
