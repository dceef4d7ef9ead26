#pragma once

// JSON encodings of complexes, cochains and covectors. Rationals always
// travel as "p/q" strings.
//
//   complex:  {"dim": n, "vertices": [["p/q", ...], ...],
//              "cells": [{"vertices": [ids], "orient": [ids]}, ...]}
//   cochain:  {"degree": p, "ring": "Q" | "ext", "values": {"<cell id>": value}}
//             value: "p/q" over Q; [{"blade": [1-based indices], "coeff": "p/q"}, ...]
//             over the exterior algebra
//   polytope: {"dim": n, "points": [[...], ...]} or a bare list of points

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pcup/exterior.hpp"
#include "pcup/pcomplex.hpp"

namespace pcup {

using Json = nlohmann::ordered_json;

Json load_json(const std::string& path);
Json parse_json(std::string_view text);

Json to_json(const Rat& r);
Json to_json(const Vec& v);
Json to_json(const ExtElement& e);
Json to_json(const RingElement& e);
Json to_json(const PComplex& x);
Json to_json(const Cochain& c);

Rat rat_from_json(const Json& j);
Vec vec_from_json(const Json& j);
ExtElement ext_from_json(const Json& j);
RingElement ring_element_from_json(const Json& j, const Ring& ring);
PComplex complex_from_json(const Json& j);
/// `ambient_dim` fixes the exterior algebra for "ext" cochains.
Cochain cochain_from_json(const Json& j, std::size_t ambient_dim);
std::vector<Vec> polytope_from_json(const Json& j);

/// "a/b,c/d,..." into a covector.
Vec parse_covector(std::string_view text);

}  // namespace pcup
