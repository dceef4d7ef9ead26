#include "pcup/io.hpp"

#include <fstream>
#include <sstream>

namespace pcup {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorKind::parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::size_t> ids_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("expected a list of ids");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw parse_error("ids must be non-negative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const ExtElement& e) {
  Json out = Json::array();
  for (const auto& [blade, coeff] : e.terms())
    out.push_back({{"blade", blade_indices(blade)}, {"coeff", to_string(coeff)}});
  return out;
}

Json to_json(const RingElement& e) {
  if (e.ring().kind == Ring::Kind::scalar) return to_string(e.value().coeff(0));
  return to_json(e.value());
}

Json to_json(const PComplex& x) {
  Json vertices = Json::array();
  for (const auto& v : x.vertices()) vertices.push_back(to_json(v));
  Json cells = Json::array();
  for (const auto& c : x.cells()) cells.push_back({{"vertices", c.vertices}, {"orient", c.orient}});
  return {{"dim", x.ambient_dim()}, {"vertices", vertices}, {"cells", cells}};
}

Json to_json(const Cochain& c) {
  Json values = Json::object();
  for (const auto& [id, v] : c.values()) values[std::to_string(id)] = to_json(v);
  return {{"degree", c.degree()},
          {"ring", c.ring().kind == Ring::Kind::scalar ? "Q" : "ext"},
          {"values", values}};
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw parse_error("expected a rational string, got " + j.dump());
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("expected a list of rationals");
  Vec out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

ExtElement ext_from_json(const Json& j) {
  if (j.is_string() || j.is_number()) return ExtElement(rat_from_json(j));
  if (!j.is_array()) throw parse_error("expected a list of blade terms");
  ExtElement out;
  for (const auto& term : j) {
    const Json& blade = field(term, "blade");
    if (!blade.is_array()) throw parse_error("blade must be a list of indices");
    std::vector<int> idx;
    for (const auto& i : blade) {
      if (!i.is_number_integer() || i.get<int>() < 1)
        throw parse_error("blade indices are 1-based positive integers");
      idx.push_back(i.get<int>());
    }
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (idx[k] <= idx[k - 1]) throw parse_error("blade indices must be strictly increasing");
    out += ExtElement::blade(blade_from_indices(idx), rat_from_json(field(term, "coeff")));
  }
  return out;
}

RingElement ring_element_from_json(const Json& j, const Ring& ring) {
  if (ring.kind == Ring::Kind::scalar) {
    if (j.is_array()) {
      const ExtElement e = ext_from_json(j);
      if (e.min_dim() > 0) throw parse_error("non-scalar value in a Q cochain");
      return RingElement(ring, e);
    }
    return RingElement::scalar(rat_from_json(j));
  }
  return RingElement(ring, ext_from_json(j));
}

PComplex complex_from_json(const Json& j) {
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<int>() < 0) throw parse_error("dim must be a natural number");
  std::vector<Vec> vertices;
  for (const auto& v : field(j, "vertices")) vertices.push_back(vec_from_json(v));
  std::vector<CellSpec> cells;
  const Json& cj = field(j, "cells");
  if (!cj.is_array()) throw parse_error("cells must be a list");
  for (const auto& c : cj) {
    CellSpec spec;
    spec.vertices = ids_from_json(field(c, "vertices"));
    if (c.contains("orient")) spec.orient = ids_from_json(c.at("orient"));
    cells.push_back(std::move(spec));
  }
  return build_complex(dim.get<std::size_t>(), std::move(vertices), std::move(cells));
}

Cochain cochain_from_json(const Json& j, std::size_t ambient_dim) {
  const Json& degree = field(j, "degree");
  if (!degree.is_number_integer()) throw parse_error("degree must be an integer");
  const std::string ring_name = j.contains("ring") ? j.at("ring").get<std::string>() : "Q";
  Ring ring;
  if (ring_name == "Q") ring = Ring::scalar();
  else if (ring_name == "ext") ring = Ring::exterior(static_cast<int>(ambient_dim));
  else throw parse_error("unknown ring \"" + ring_name + "\"");
  Cochain out(degree.get<int>(), ring);
  const Json& values = field(j, "values");
  if (!values.is_object()) throw parse_error("values must be an object keyed by cell id");
  for (const auto& [key, value] : values.items()) {
    std::size_t pos = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != key.size()) throw parse_error("bad cell id \"" + key + "\"");
    out.set(id, ring_element_from_json(value, ring));
  }
  return out;
}

std::vector<Vec> polytope_from_json(const Json& j) {
  const Json& points = j.is_object() ? field(j, "points") : j;
  if (!points.is_array()) throw parse_error("polytope must be a list of points");
  std::vector<Vec> out;
  for (const auto& p : points) out.push_back(vec_from_json(p));
  if (j.is_object() && j.contains("dim"))
    for (const auto& p : out)
      if (p.size() != j.at("dim").get<std::size_t>())
        throw Error(ErrorKind::dimension_mismatch, "polytope point of wrong dimension");
  return out;
}

Vec parse_covector(std::string_view text) {
  Vec out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_rat(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace pcup
