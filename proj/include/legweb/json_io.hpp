#pragma once
// JSON persistence for the exact objects. Rationals are decimal strings
// "n" or "n/m", so files round-trip bit-identically.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "legweb/abelian.hpp"
#include "legweb/numeric_webs.hpp"

namespace legweb {

using Json = nlohmann::ordered_json;

// Malformed or unreadable input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& r);
Json to_json(const MultiPoly& p);  // [{"c": "1/2", "e": [ex, ey, ep, eq]}, ...]
Json to_json(const WebSpec& w);    // {"d": 3, "q": ["0", "1", "2"]}
Json to_json(const AbelianRelation& r);
Json to_json(const ComplementVectors& v);

Rational rational_from_json(const Json& j);
MultiPoly poly_from_json(const Json& j);
WebSpec web_from_json(const Json& j);
AbelianRelation relation_from_json(const Json& j);
ComplementVectors complement_from_json(const Json& j);

struct RelationsFile {
  static constexpr const char* format = "legweb-relations-v1";
  WebSpec web;
  ComplementVectors complement;
  std::vector<AbelianRelation> relations;
};

Json to_json(const RelationsFile& f);
RelationsFile relations_from_json(const Json& j);

// Throw FormatError on I/O failure or malformed content.
void write_relations_file(const std::string& path, const RelationsFile& f);
RelationsFile read_relations_file(const std::string& path);

// "0,1,-3/2" -> rationals; throws FormatError.
std::vector<Rational> parse_rational_list(const std::string& text);

Json to_json(const Point3& p);

}  // namespace legweb
