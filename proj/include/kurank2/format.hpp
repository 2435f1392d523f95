#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kurank2/birgraph.hpp"
#include "kurank2/catalog.hpp"
#include "kurank2/certifier.hpp"
#include "kurank2/chern.hpp"
#include "kurank2/cubic3.hpp"

namespace kurank2 {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"schema": "kurank2/<kind>", "version": 1}
Json envelope(const std::string& kind);

Json wide_json(Wide x);
Wide json_wide(const Json& j);
Json rational_json(const Rational& q);  // "p/q" string
Json to_json(LatticeVector v);
LatticeVector vector_from_json(const Json& j);
Json to_json(KuClass v);
Json to_json(const Mat2& m);
Json to_json(const ChernCharacterY3& e);
Json to_json(const CanonicalForm& f);
Json to_json(const FanoKuEntry& e);
Json catalog_json();
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);
Json to_json(const CertifyReport& r);
Json to_json(const ModuliInfo& info);
Json to_json(const Stratum& s);
Json to_json(const FanoFiberRecord& r);
Json to_json(const ExtLocus& e);
Json to_json(const BirEdge& e);
Json to_json(const BirGraph& g);

// Indented "key: value" rendering of a JSON object, keys in stored order.
std::string render_text(const Json& j);

std::string certificate_text(const Certificate& c);
std::string certificate_dot(const Certificate& c);
std::string birgraph_dot(const BirGraph& g);

struct HilbertRow {
  Int d, g, m;
};
// the (d, g, m) rows of the small-degree curve table
const std::vector<HilbertRow>& hilbert_table_rows();
std::string hilbert_table_text();

}  // namespace kurank2
