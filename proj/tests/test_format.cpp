#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <regex>

#include "kurank2/class_parser.hpp"
#include "kurank2/format.hpp"
#include "kurank2/render.hpp"

using namespace kurank2;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

// tags balance and attributes are quoted; enough to catch broken output
bool well_formed(const std::string& xml) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while ((i = xml.find('<', i)) != std::string::npos) {
    const std::size_t j = xml.find('>', i);
    if (j == std::string::npos) return false;
    std::string tag = xml.substr(i + 1, j - i - 1);
    i = j + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (tag.back() == '/') continue;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    if (count(tag, "\"") % 2 != 0) return false;
    stack.push_back(tag.substr(0, tag.find(' ')));
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("class parser") {
  CHECK(parse_class("0") == KuClass{0, 0});
  CHECK(parse_class("3,2") == KuClass{3, 2});
  CHECK(parse_class("(-3, 2)") == KuClass{-3, 2});
  CHECK(parse_class("2a+b") == KuClass{2, 1});
  CHECK(parse_class("b+g") == KuClass{-1, 2});
  CHECK(parse_class("-α-3β") == KuClass{-1, -3});
  CHECK(parse_class("α-2γ") == KuClass{3, -2});
  CHECK(parse_class("2*A - G") == KuClass{3, -1});
  CHECK_THROWS_AS(parse_class("3"), Error);
  CHECK_THROWS_AS(parse_class("2x"), Error);
  CHECK_THROWS_AS(parse_class(""), Error);
  CHECK_THROWS_AS(parse_class("a+"), Error);
  for (Int n = -6; n <= 6; ++n)
    for (Int m = -6; m <= 6; ++m) CHECK(parse_class(to_symbolic({n, m})) == KuClass{n, m});
}

TEST_CASE("wide integers survive JSON") {
  const Wide big = Wide(INT64_MAX) * 1000 + 7;
  CHECK(json_wide(wide_json(big)) == big);
  CHECK(json_wide(wide_json(-big)) == -big);
  CHECK(wide_json(-5).is_number_integer());
}

TEST_CASE("certificate JSON round trip") {
  for (FanoLabel l : {FanoLabel{2, 3}, FanoLabel{2, 1}, FanoLabel{2, 4}})
    for (LatticeVector v : {LatticeVector{7, 3}, LatticeVector{-5, 8}, LatticeVector{6, 4}}) {
      const Certificate c = certify(lookup(l), v);
      const Json j = to_json(c);
      CHECK(j.at("schema") == "kurank2/certificate");
      CHECK(j.at("version") == 1);
      const Certificate back = certificate_from_json(Json::parse(j.dump()));
      CHECK(to_json(back).dump() == j.dump());
      CHECK(verify(back));
    }
}

TEST_CASE("catalog JSON") {
  const Json j = catalog_json();
  CHECK(j.at("schema") == "kurank2/catalog");
  CHECK(j.at("entries").size() == catalog_entries().size());
  CHECK(Json::parse(j.dump(2)) == j);
}

TEST_CASE("text renderings") {
  Json j = envelope("demo");
  j["value"] = 3;
  j["list"] = Json::array({1, 2});
  const std::string t = render_text(j);
  CHECK(t.find("schema: kurank2/demo") != std::string::npos);
  CHECK(t.find("value: 3") != std::string::npos);
  const std::string dot = birgraph_dot(build_graph(9));
  CHECK(dot.find("\"5,4\" -- \"7,1\"") != std::string::npos);
  CHECK(dot.find("class=Special") != std::string::npos);
  const std::string cdot = certificate_dot(certify(lookup(2, 3), {5, 3}));
  CHECK(cdot.rfind("digraph", 0) == 0);
  CHECK(hilbert_table_text().find("7 2 3 -α-3β") != std::string::npos);
}

TEST_CASE("lattice SVG") {
  for (CoordinateMode mode : {CoordinateMode::Hexagonal, CoordinateMode::Euclidean}) {
    RenderSpec s;
    s.mode = mode;
    s.n_min = -5;
    s.n_max = 4;
    s.m_min = -3;
    s.m_max = 6;
    const std::string svg = render_lattice_svg(s);
    CHECK(well_formed(svg));
    CHECK(count(svg, "<circle class=\"pt\"") == 100);
    CHECK(svg.find("data-n=\"-5\" data-m=\"6\"") != std::string::npos);
  }
  RenderSpec bad;
  bad.n_min = 3;
  bad.n_max = 2;
  CHECK_THROWS_AS(render_lattice_svg(bad), Error);
  RenderSpec huge;
  huge.n_min = -1000;
  huge.n_max = 1000;
  huge.m_min = -10;
  huge.m_max = 10;
  CHECK_THROWS_AS(render_lattice_svg(huge), Error);
}

TEST_CASE("hexagonal coordinates are the doubled shear") {
  RenderSpec s;
  s.n_min = -2;
  s.n_max = 2;
  s.m_min = -2;
  s.m_max = 2;
  s.annotate = false;
  const std::string svg = render_lattice_svg(s);
  const std::regex pt("data-n=\"(-?\\d+)\" data-m=\"(-?\\d+)\" cx=\"(-?\\d+)\" cy=\"(-?\\d+)\"");
  std::map<std::pair<Int, Int>, std::pair<Int, Int>> pos;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), pt); it != std::sregex_iterator(); ++it)
    pos[{std::stoll((*it)[1]), std::stoll((*it)[2])}] = {std::stoll((*it)[3]), std::stoll((*it)[4])};
  REQUIRE(pos.size() == 25);
  const auto [x0, y0] = pos.at({0, 0});
  for (const auto& [nm, xy] : pos) {
    // x = 2n + m in half-steps, one fixed row height per unit of m
    CHECK(xy.first - x0 == (2 * nm.first + nm.second) * 20);
    CHECK(xy.second - y0 == -nm.second * 35);
  }
}
