#pragma once

#include "mcone/contact_examples.hpp"
#include "mcone/cones.hpp"
#include "mcone/discretized.hpp"
#include "mcone/simplex.hpp"
#include "mcone/spherical.hpp"

#include <json.hpp>

#include <string>

namespace mcone {

using Json = nlohmann::ordered_json;

/// Parses JSON text. Syntax errors become InputError whose message names
/// the line and column.
Json parse_json(const std::string& text);

// Every *_from_json validates its input and throws InputError naming the
// offending field (as a JSON pointer-like path).

Json to_json(const PolyCone& c);
PolyCone polycone_from_json(const Json& j);

Json to_json(const SimplexMap& m);
SimplexMap simplex_map_from_json(const Json& j);

/// {"dim", "vertices", "edges", "values", "mesh_h"}. On input, vertex ids
/// may be any distinct integers or strings; edges refer to them. mesh_h is
/// optional and acts as the declared step.
Json to_json(const DiscretizedSpace& x);
DiscretizedSpace discretized_from_json(const Json& j);

Json to_json(const AnalysisReport& r);
Json to_json(const CircleClass& c);
Json to_json(const Vec& v);

Vec vec_from_json(const Json& j, const std::string& field);

/// Family specification: {"family": "MInterval", "a": 0, "b": 3.93, "k": 0,
/// "resolution": 512}. For intervals "b" is b' and b = b' + 2 pi k.
/// CircleRestriction takes {"inner": {...}}.
struct ExampleSpec {
  ContactExample example;
  int resolution = 512;
};
ExampleSpec example_from_json(const Json& j);

}  // namespace mcone
