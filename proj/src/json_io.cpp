#include "legweb/json_io.hpp"

#include <fstream>
#include <sstream>

namespace legweb {

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"c", to_string(c)}, {"e", m.exps}});
  return out;
}

Json to_json(const WebSpec& w) {
  Json q = Json::array();
  for (const auto& v : w.q) q.push_back(to_string(v));
  return {{"d", w.d()}, {"q", q}};
}

Json to_json(const AbelianRelation& r) {
  Json comps = Json::array();
  for (const auto& h : r.components) comps.push_back(to_json(h));
  return {{"m", r.m}, {"j", r.j}, {"mu", r.mu}, {"components", comps}};
}

Json to_json(const ComplementVectors& v) {
  Json out = Json::array();
  for (const auto& vec : v.vectors) {
    Json row = Json::array();
    for (const auto& c : vec) row.push_back(to_string(c));
    out.push_back(row);
  }
  return out;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) fail("rational must be a string \"n\" or \"n/m\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

MultiPoly poly_from_json(const Json& j) {
  if (!j.is_array()) fail("polynomial must be an array of terms");
  MultiPoly p;
  for (const auto& t : j) {
    const Json& e = field(t, "e");
    if (!e.is_array() || e.size() != 4) fail("exponent must be [ex, ey, ep, eq]");
    Monomial m;
    for (int k = 0; k < 4; ++k) {
      if (!e[k].is_number_integer() || e[k].get<int>() < 0)
        fail("exponents must be non-negative integers");
      m.exps[k] = e[k].get<int>();
    }
    Rational c = rational_from_json(field(t, "c"));
    if (c == 0) fail("zero coefficient in polynomial");
    if (p.coeff(m) != 0) fail("repeated monomial in polynomial");
    p.add_term(m, c);
  }
  return p;
}

WebSpec web_from_json(const Json& j) {
  WebSpec w;
  const Json& q = field(j, "q");
  if (!q.is_array()) fail("'q' must be an array");
  for (const auto& v : q) w.q.push_back(rational_from_json(v));
  if (int_field(j, "d") != static_cast<int>(w.d())) fail("'d' does not match the length of 'q'");
  try {
    w.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return w;
}

AbelianRelation relation_from_json(const Json& j) {
  AbelianRelation r;
  r.m = int_field(j, "m");
  r.j = int_field(j, "j");
  r.mu = int_field(j, "mu");
  const Json& comps = field(j, "components");
  if (!comps.is_array()) fail("'components' must be an array");
  for (const auto& c : comps) r.components.push_back(poly_from_json(c));
  return r;
}

ComplementVectors complement_from_json(const Json& j) {
  if (!j.is_array()) fail("complement vectors must be an array");
  ComplementVectors v;
  for (const auto& row : j) {
    if (!row.is_array()) fail("complement vector must be an array");
    RationalVector vec;
    for (const auto& c : row) vec.push_back(rational_from_json(c));
    v.vectors.push_back(std::move(vec));
  }
  return v;
}

Json to_json(const RelationsFile& f) {
  Json rels = Json::array();
  for (const auto& r : f.relations) rels.push_back(to_json(r));
  Json web = to_json(f.web);
  return {{"format", RelationsFile::format},
          {"d", web["d"]},
          {"q", web["q"]},
          {"complement_vectors", to_json(f.complement)},
          {"relations", rels}};
}

RelationsFile relations_from_json(const Json& j) {
  const Json& fmt = field(j, "format");
  if (!fmt.is_string() || fmt.get<std::string>() != RelationsFile::format)
    fail(std::string("expected format '") + RelationsFile::format + "'");
  RelationsFile f;
  f.web = web_from_json(j);
  f.complement = complement_from_json(field(j, "complement_vectors"));
  const Json& rels = field(j, "relations");
  if (!rels.is_array()) fail("'relations' must be an array");
  for (const auto& r : rels) f.relations.push_back(relation_from_json(r));
  return f;
}

void write_relations_file(const std::string& path, const RelationsFile& f) {
  std::ofstream out(path);
  if (!out) fail("cannot open '" + path + "' for writing");
  out << to_json(f).dump(1) << '\n';
  if (!out) fail("write to '" + path + "' failed");
}

RelationsFile read_relations_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail("'" + path + "' is not valid JSON: " + e.what());
  }
  return relations_from_json(j);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      fail("bad rational '" + item + "' in list: " + e.what());
    }
  }
  if (out.empty()) fail("empty rational list");
  return out;
}

Json to_json(const Point3& p) { return Json::array({p.x, p.y, p.p}); }

}  // namespace legweb
