#include "kurank2/format.hpp"

#include <sstream>

namespace kurank2 {

Json envelope(const std::string& kind) {
  Json j;
  j["schema"] = "kurank2/" + kind;
  j["version"] = kSchemaVersion;
  return j;
}

Json wide_json(Wide x) {
  if (x >= INT64_MIN && x <= INT64_MAX) return static_cast<std::int64_t>(x);
  return to_string(x);
}

Wide json_wide(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  const std::string s = j.get<std::string>();
  Wide out = 0;
  bool neg = !s.empty() && s[0] == '-';
  for (std::size_t i = neg ? 1 : 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') fail(ErrorCode::Parse, "bad integer '" + s + "'");
    out = add(mul(out, 10), neg ? -(s[i] - '0') : (s[i] - '0'));
  }
  return out;
}

Json rational_json(const Rational& q) { return to_string(q); }

Json to_json(LatticeVector v) { return Json::array({v.a, v.b}); }

LatticeVector vector_from_json(const Json& j) { return {j.at(0).get<Int>(), j.at(1).get<Int>()}; }

Json to_json(KuClass v) {
  Json j;
  j["n"] = v.n;
  j["m"] = v.m;
  j["symbolic"] = to_symbolic(v);
  return j;
}

Json to_json(const Mat2& m) { return Json::array({Json::array({m.m11, m.m12}), Json::array({m.m21, m.m22})}); }

Json to_json(const ChernCharacterY3& e) {
  Json j;
  j["r"] = e.r;
  j["c1"] = e.c1;
  j["c2"] = rational_json(e.c2());
  j["c3"] = rational_json(e.c3());
  j["text"] = to_string(e);
  return j;
}

Json to_json(const CanonicalForm& f) {
  Json j = envelope("canonical-form");
  j["family"] = to_string(f.family);
  j["n"] = f.n;
  j["basis_change"] = to_json(f.basis_change);
  j["canonical_matrix"] = to_json(family_form(f.family, f.n).m);
  j["serre_order"] = f.family == Family::IPlus || f.family == Family::IMinus   ? 6
                     : f.family == Family::JPlus || f.family == Family::JMinus ? 4
                                                                                : 3;
  return j;
}

Json to_json(const FanoKuEntry& e) {
  Json j;
  j["label"] = to_string(e.label);
  j["index"] = e.label.index;
  j["degree"] = e.label.degree;
  j["name"] = e.name;
  j["basis"] = e.basis;
  j["euler_matrix"] = to_json(e.euler.m);
  j["serre_matrix"] = to_json(e.serre.d);
  j["serre_relation"] = e.serre_relation;
  j["serre_reconstructed"] = e.serre_reconstructed;
  j["gldim_bound"] = {{"value", rational_json(e.gldim.value)}, {"strict", e.gldim.strict}};
  Json base;
  base["kind"] = e.base.kind == BaseKind::ChiThreshold ? "chi-threshold" : "curve-rank";
  if (e.base.kind == BaseKind::ChiThreshold) base["chi_at_least"] = e.base.chi_threshold;
  base["unit_norm"] = true;
  base["description"] = e.base.description;
  base["serre_seeds"] = Json::array();
  for (auto s : e.base.serre_seeds) base["serre_seeds"].push_back(to_json(s));
  j["base_predicate"] = base;
  j["family"] = e.family ? Json(to_string(*e.family)) : Json(nullptr);
  j["curve_genus"] = e.curve_genus ? Json(*e.curve_genus) : Json(nullptr);
  j["certifiable"] = e.certifiable;
  j["notes"] = e.notes;
  return j;
}

Json catalog_json() {
  Json j = envelope("catalog");
  j["catalog_version"] = kCatalogVersion;
  j["uncovered"] = "index 1, degree 2/4/6/8: Kuznetsov component convention floating, not covered";
  j["entries"] = Json::array();
  for (const auto& e : catalog_entries()) j["entries"].push_back(to_json(e));
  return j;
}

namespace {

BaseReason reason_from(const std::string& s) {
  for (BaseReason r : {BaseReason::Threshold, BaseReason::UnitNorm, BaseReason::SerreOrbit})
    if (to_string(r) == s) return r;
  fail(ErrorCode::Parse, "unknown base reason '" + s + "'");
}

NodeKind kind_from(const std::string& s) {
  for (NodeKind k : {NodeKind::Base, NodeKind::Split, NodeKind::Multiple})
    if (to_string(k) == s) return k;
  fail(ErrorCode::Parse, "unknown node kind '" + s + "'");
}

Rational rational_from(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace

Json to_json(const Certificate& c) {
  Json j = envelope("certificate");
  j["entry"] = to_string(c.entry);
  j["root_vector"] = to_json(c.root_vector);
  j["root"] = c.root;
  j["depth"] = c.depth();
  j["nodes"] = Json::array();
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const CertNode& n = c.nodes[i];
    Json node;
    node["id"] = i;
    node["kind"] = to_string(n.kind);
    node["v"] = to_json(n.v);
    switch (n.kind) {
      case NodeKind::Base:
        node["reason"] = to_string(n.reason);
        break;
      case NodeKind::Split:
        node["v_plus"] = to_json(n.v_plus);
        node["v_minus"] = to_json(n.v_minus);
        node["chi_cross"] = wide_json(n.chi_cross);
        node["delta_sin_sq"] = rational_json(n.delta_sin_sq);
        node["plus_child"] = n.plus_child;
        node["minus_child"] = n.minus_child;
        break;
      case NodeKind::Multiple:
        node["multiplicity"] = n.multiplicity;
        node["child"] = n.child;
        break;
    }
    j["nodes"].push_back(node);
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  if (j.at("schema") != "kurank2/certificate") fail(ErrorCode::Parse, "not a certificate document");
  Certificate c;
  c.entry = parse_label(j.at("entry").get<std::string>());
  c.root_vector = vector_from_json(j.at("root_vector"));
  c.root = j.at("root").get<std::size_t>();
  for (const Json& node : j.at("nodes")) {
    CertNode n;
    n.kind = kind_from(node.at("kind").get<std::string>());
    n.v = vector_from_json(node.at("v"));
    switch (n.kind) {
      case NodeKind::Base:
        n.reason = reason_from(node.at("reason").get<std::string>());
        break;
      case NodeKind::Split:
        n.v_plus = vector_from_json(node.at("v_plus"));
        n.v_minus = vector_from_json(node.at("v_minus"));
        n.chi_cross = json_wide(node.at("chi_cross"));
        n.delta_sin_sq = rational_from(node.at("delta_sin_sq").get<std::string>());
        n.plus_child = node.at("plus_child").get<std::size_t>();
        n.minus_child = node.at("minus_child").get<std::size_t>();
        break;
      case NodeKind::Multiple:
        n.multiplicity = node.at("multiplicity").get<Int>();
        n.child = node.at("child").get<std::size_t>();
        break;
    }
    c.nodes.push_back(n);
  }
  return c;
}

Json to_json(const CertifyReport& r) {
  Json j = envelope("certify-report");
  j["entry"] = to_string(r.entry);
  j["norm_bound"] = r.norm_bound;
  j["vectors"] = r.vectors;
  j["certified"] = r.certified;
  j["verified"] = r.verified;
  j["max_depth"] = r.max_depth;
  j["split_nodes"] = r.split_nodes;
  j["all_splits_negative"] = r.all_splits_negative;
  j["failures"] = Json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"v", to_json(f.v)}, {"message", f.message}});
  return j;
}

Json to_json(const FanoFiberRecord& r) {
  Json j;
  j["v_minus"] = to_json(r.v_minus);
  j["v_plus"] = to_json(r.v_plus);
  j["chi_pm"] = wide_json(r.chi_pm);
  j["chi_mp"] = wide_json(r.chi_mp);
  j["degree"] = wide_json(r.degree);
  j["r"] = wide_json(r.r);
  j["passes"] = r.passes;
  return j;
}

Json to_json(const ModuliInfo& info) {
  Json j = envelope("moduli-info");
  j["class"] = to_json(info.cls);
  j["dim"] = wide_json(info.dim);
  j["primitive"] = info.primitive;
  j["chi_self"] = wide_json(info.chi_self);
  j["sextant_normal"] = {{"class", to_json(info.normal.cls)}, {"k", info.normal.k}, {"sign", info.normal.sign}};
  j["b1"] = info.b1 ? Json(*info.b1) : Json(nullptr);
  j["b2"] = info.b2 ? Json(*info.b2) : Json(nullptr);
  j["aj_fiber_dim"] = info.aj_fiber_dim ? wide_json(*info.aj_fiber_dim) : Json(nullptr);
  j["fano_fiber"] = info.fano_fiber ? to_json(*info.fano_fiber) : Json(nullptr);
  j["mrc_quotient"] = info.mrc_quotient ? Json(*info.mrc_quotient) : Json(nullptr);
  j["labels"] = info.labels;
  return j;
}

Json to_json(const Stratum& s) {
  Json j;
  j["v1"] = to_json(s.v1);
  j["v2"] = to_json(s.v2);
  j["codim"] = wide_json(s.codim);
  j["dominant"] = s.dominant;
  return j;
}

Json to_json(const ExtLocus& e) {
  Json j = envelope("ext-locus");
  j["codim"] = wide_json(e.codim);
  j["valid"] = e.valid;
  j["small_gap"] = e.small_gap;
  j["reasons"] = e.reasons;
  return j;
}

Json to_json(const BirEdge& e) {
  return {{"x", Json::array({e.x.a, e.x.b})}, {"y", Json::array({e.y.a, e.y.b})}, {"rule", to_string(e.rule)}};
}

Json to_json(const BirGraph& g) {
  Json j = envelope("birgraph");
  j["sum_bound"] = g.sum_bound;
  j["same_sum_drawn_as"] = "path through each level; the full relation is a clique per level";
  j["nodes"] = Json::array();
  for (SPoint p : g.nodes) j["nodes"].push_back(Json::array({p.a, p.b}));
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& e : g.edges) ++counts[static_cast<int>(e.rule)];
  j["edge_counts"] = {{"SameSum", counts[0]}, {"ShiftMinusTwo", counts[1]}, {"Special", counts[2]}};
  j["edges"] = Json::array();
  for (const auto& e : drawn_edges(g)) j["edges"].push_back(to_json(e));
  return j;
}

namespace {

void render_into(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  auto simple_array = [](const Json& v) {
    for (const auto& x : v)
      if (x.is_structured() && !(x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); })))
        return false;
    return true;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render_into(os, v, indent + 1);
    } else if (v.is_array() && !simple_array(v)) {
      os << pad << it.key() << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          std::ostringstream inner;
          render_into(inner, x, indent + 1);
          std::string block = inner.str();
          // first line gets the list marker
          block.replace(0, static_cast<std::size_t>(indent + 1) * 2, pad + "- ");
          os << block;
        } else {
          os << pad << "- " << scalar(x) << "\n";
        }
      }
    } else if (v.is_array()) {
      os << pad << it.key() << ": " << v.dump() << "\n";
    } else {
      os << pad << it.key() << ": " << scalar(v) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render_into(os, j, 0);
  return os.str();
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream os;
  os << "certificate v" << kSchemaVersion << "\n";
  os << "entry " << to_string(c.entry) << "\n";
  os << "root " << to_string(c.root_vector) << " node " << c.root << "\n";
  os << "depth " << c.depth() << "\n";
  os << "nodes " << c.nodes.size() << "\n";
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const CertNode& n = c.nodes[i];
    os << "  " << i << " " << to_string(n.kind) << " v=" << to_string(n.v);
    switch (n.kind) {
      case NodeKind::Base:
        os << " reason=" << to_string(n.reason);
        break;
      case NodeKind::Split:
        os << " v+=" << to_string(n.v_plus) << "#" << n.plus_child << " v-=" << to_string(n.v_minus) << "#"
           << n.minus_child << " chi(v+,v-)=" << to_string(n.chi_cross)
           << " sin2(pi*delta)=" << to_string(n.delta_sin_sq);
        break;
      case NodeKind::Multiple:
        os << " k=" << n.multiplicity << " of #" << n.child;
        break;
    }
    os << "\n";
  }
  return os.str();
}

std::string certificate_dot(const Certificate& c) {
  std::ostringstream os;
  os << "digraph certificate {\n";
  os << "  label=\"entry " << to_string(c.entry) << ", root " << to_string(c.root_vector) << "\";\n";
  os << "  node [fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const CertNode& n = c.nodes[i];
    os << "  n" << i << " [label=\"" << to_string(n.v);
    if (n.kind == NodeKind::Base) os << "\\n" << to_string(n.reason) << "\", shape=box];\n";
    else if (n.kind == NodeKind::Split) os << "\\nchi=" << to_string(n.chi_cross) << "\", shape=ellipse];\n";
    else os << "\\nx" << n.multiplicity << "\", shape=doublecircle];\n";
  }
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const CertNode& n = c.nodes[i];
    if (n.kind == NodeKind::Split) {
      os << "  n" << i << " -> n" << n.plus_child << " [label=\"+\"];\n";
      os << "  n" << i << " -> n" << n.minus_child << " [label=\"-\"];\n";
    } else if (n.kind == NodeKind::Multiple) {
      os << "  n" << i << " -> n" << n.child << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string birgraph_dot(const BirGraph& g) {
  std::ostringstream os;
  auto id = [](SPoint p) { return "\"" + std::to_string(p.a) + "," + std::to_string(p.b) + "\""; };
  os << "graph birationality {\n";
  os << "  node [shape=circle, fontsize=10];\n";
  Int level = -1;
  for (SPoint p : g.nodes) {
    if (p.sum() != level) {
      if (level != -1) os << "  }\n";
      level = p.sum();
      os << "  { rank=same;";
      os << " // a+b = " << level << "\n";
    }
    os << "    " << id(p) << ";\n";
  }
  if (level != -1) os << "  }\n";
  for (const BirEdge& e : drawn_edges(g)) {
    os << "  " << id(e.x) << " -- " << id(e.y);
    switch (e.rule) {
      case EdgeRule::SameSum: os << " [style=dashed, class=SameSum]"; break;
      case EdgeRule::ShiftMinusTwo: os << " [style=solid, class=ShiftMinusTwo]"; break;
      case EdgeRule::Special: os << " [style=bold, penwidth=3, class=Special]"; break;
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

const std::vector<HilbertRow>& hilbert_table_rows() {
  static const std::vector<HilbertRow> rows{{1, 0, 0}, {2, 0, 1}, {2, 0, 2}, {3, 0, 1}, {3, 1, 2}, {4, 0, 1},
                                            {4, 0, 2}, {4, 0, 3}, {4, 1, 2}, {5, 0, 3}, {5, 1, 2}, {5, 1, 3},
                                            {5, 2, 2}, {6, 1, 2}, {6, 1, 3}, {7, 2, 3}};
  return rows;
}

std::string hilbert_table_text() {
  std::ostringstream os;
  os << "d g m v(d,g,m)\n";
  for (const auto& r : hilbert_table_rows())
    os << r.d << " " << r.g << " " << r.m << " " << to_symbolic(hilbert_character(r.d, r.g, r.m)) << "\n";
  return os.str();
}

}  // namespace kurank2
