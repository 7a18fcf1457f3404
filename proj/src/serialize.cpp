#include "mcone/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace mcone {
namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InputError(field, field + ": " + what);
}

const Json& require(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(field + "/" + key, "missing field");
  return *it;
}

double number(const Json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(field, "expected a finite number");
  return v;
}

int integer(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) {
    // Accept integral floats such as 2.0.
    const double v = number(j, field);
    if (v != std::floor(v) || std::abs(v) > 1e9) fail(field, "expected an integer");
    return static_cast<int>(v);
  }
  const auto v = j.get<long long>();
  if (std::llabs(v) > 1000000000LL) fail(field, "integer out of range");
  return static_cast<int>(v);
}

std::vector<Vec> vec_list(const Json& j, const std::string& field, int dim) {
  if (!j.is_array()) fail(field, "expected an array");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = field + "/" + std::to_string(i);
    out.push_back(vec_from_json(j[i], f));
    if (dim >= 0 && out.back().size() != dim) fail(f, "expected " + std::to_string(dim) + " coordinates");
  }
  return out;
}

int optional_int(const Json& j, const std::string& key, int fallback, const std::string& field) {
  const auto it = j.find(key);
  return it == j.end() ? fallback : integer(*it, field + "/" + key);
}

ContactExample family_from_json(const Json& j, const std::string& field) {
  const Json& fam = require(j, "family", field);
  if (!fam.is_string()) fail(field + "/family", "expected a string");
  const std::string name = fam.get<std::string>();
  try {
    if (name == "HopfSphere")
      return ContactExample::hopf(integer(require(j, "n", field), field + "/n"), optional_int(j, "orientation", 1, field));
    if (name == "CotangentTorusComplement")
      return ContactExample::complement(integer(require(j, "k", field), field + "/k"));
    if (name == "CutCotangentTorus") return ContactExample::cut(integer(require(j, "k", field), field + "/k"));
    if (name == "Mn") return ContactExample::mn(integer(require(j, "n", field), field + "/n"));
    if (name == "MInterval")
      return ContactExample::interval(number(require(j, "a", field), field + "/a"),
                                      number(require(j, "b", field), field + "/b"), optional_int(j, "k", 0, field));
    if (name == "CircleRestriction")
      return ContactExample::restrict_to_circle(family_from_json(require(j, "inner", field), field + "/inner"));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    fail(field, e.what());
  }
  fail(field + "/family",
       "unknown family '" + name +
           "' (expected HopfSphere, CotangentTorusComplement, CutCotangentTorus, Mn, MInterval or CircleRestriction)");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports a byte offset; translate it to line and column.
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
    const std::size_t nl = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    const std::size_t col = nl == std::string::npos || pos == 0 ? pos + 1 : pos - nl;
    throw InputError("line " + std::to_string(line),
                     "JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         e.what());
  }
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Vec vec_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], field + "/" + std::to_string(i));
  return v;
}

Json to_json(const PolyCone& c) {
  Json j;
  j["dim"] = c.ambient_dim();
  j["generators"] = Json::array();
  for (const auto& g : c.generators()) j["generators"].push_back(to_json(g));
  j["halfspaces"] = Json::array();
  for (const auto& h : c.halfspaces()) j["halfspaces"].push_back(to_json(h.normal));
  return j;
}

PolyCone polycone_from_json(const Json& j) {
  const int dim = integer(require(j, "dim", ""), "/dim");
  if (dim < 1 || dim > 8) fail("/dim", "dimension must be in [1, 8]");
  std::vector<Vec> gens = vec_list(require(j, "generators", ""), "/generators", dim);
  const std::vector<Vec> normals = vec_list(require(j, "halfspaces", ""), "/halfspaces", dim);
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (std::abs(normals[i].norm() - 1.0) > 1e-6) fail("/halfspaces/" + std::to_string(i), "normal is not unit length");
    hs.push_back({normals[i]});
  }
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (hs[i].normal.dot(gens[g]) < -1e-7 * std::max(1.0, gens[g].norm()))
        fail("/generators/" + std::to_string(g), "violates half-space " + std::to_string(i));
  // The half-space set must not be larger than the generated cone.
  const PolyCone by_gens = cone_from_generators(gens, dim);
  const RayFrame frame = enumerate_extreme_rays(normals, dim);
  std::vector<Vec> probes = frame.rays;
  for (const auto& l : frame.lineality) {
    probes.push_back(l);
    probes.push_back(-l);
  }
  for (const auto& p : probes)
    if (!by_gens.contains(p, 1e-7)) fail("/halfspaces", "half-spaces describe a larger cone than the generators");
  return PolyCone::from_parts(dim, std::move(gens), std::move(hs));
}

Json to_json(const SimplexMap& m) {
  Json j;
  j["columns"] = Json::array();
  for (const auto& c : m.columns()) j["columns"].push_back(to_json(c));
  return j;
}

SimplexMap simplex_map_from_json(const Json& j) {
  const Json& cols = require(j, "columns", "");
  if (!cols.is_array() || cols.empty()) fail("/columns", "expected a nonempty array of columns");
  const int k = cols[0].is_array() ? static_cast<int>(cols[0].size()) : -1;
  if (k < 1) fail("/columns/0", "expected a nonempty array of numbers");
  if (cols.size() > 16) fail("/columns", "at most 16 columns are supported");
  return SimplexMap(vec_list(cols, "/columns", k));
}

Json to_json(const DiscretizedSpace& x) {
  Json j;
  j["dim"] = x.dim();
  j["vertices"] = Json::array();
  for (int v = 0; v < x.size(); ++v) j["vertices"].push_back(v);
  j["edges"] = Json::array();
  for (const auto& [a, b] : x.edges()) j["edges"].push_back(Json::array({a, b}));
  j["values"] = Json::array();
  for (const auto& v : x.values()) j["values"].push_back(to_json(v));
  j["mesh_h"] = x.mesh_h();
  return j;
}

DiscretizedSpace discretized_from_json(const Json& j) {
  const int dim = integer(require(j, "dim", ""), "/dim");
  if (dim < 1) fail("/dim", "dimension must be positive");
  std::vector<Vec> values = vec_list(require(j, "values", ""), "/values", dim);
  const int n = static_cast<int>(values.size());

  std::map<std::string, int> ids;
  const auto vit = j.find("vertices");
  if (vit != j.end()) {
    if (!vit->is_array() || static_cast<int>(vit->size()) != n)
      fail("/vertices", "expected one id per value (" + std::to_string(n) + ")");
    for (int v = 0; v < n; ++v) {
      const Json& id = (*vit)[static_cast<std::size_t>(v)];
      if (!id.is_number_integer() && !id.is_string())
        fail("/vertices/" + std::to_string(v), "vertex ids must be integers or strings");
      if (!ids.emplace(id.dump(), v).second) fail("/vertices/" + std::to_string(v), "duplicate vertex id");
    }
  } else {
    for (int v = 0; v < n; ++v) ids.emplace(Json(v).dump(), v);
  }

  const Json& ej = require(j, "edges", "");
  if (!ej.is_array()) fail("/edges", "expected an array of [i, j] pairs");
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < ej.size(); ++e) {
    const std::string f = "/edges/" + std::to_string(e);
    if (!ej[e].is_array() || ej[e].size() != 2) fail(f, "expected an [i, j] pair");
    int ends[2];
    for (int s = 0; s < 2; ++s) {
      const auto it = ids.find(ej[e][static_cast<std::size_t>(s)].dump());
      if (it == ids.end()) fail(f + "/" + std::to_string(s), "unknown vertex id");
      ends[s] = it->second;
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  double step = 0.0;
  if (const auto it = j.find("mesh_h"); it != j.end()) {
    step = number(*it, "/mesh_h");
    if (step < 0.0) fail("/mesh_h", "must be nonnegative");
  }
  return DiscretizedSpace(dim, std::move(values), std::move(edges), step);
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["family"] = r.family;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["resolution"] = r.resolution;
  j["vertices"] = r.vertices;
  j["mesh_h"] = r.mesh_h;
  j["c1"] = r.c1;
  j["c2"] = r.c2;
  j["c3"] = r.c3;
  j["image"] = r.image_description;
  if (!r.sampled_image.empty()) j["sampled_image"] = r.sampled_image;
  j["momentum_cone"] = to_json(r.momentum_cone);
  j["levels"] = Json::array();
  for (const auto& l : r.levels) j["levels"].push_back(Json{{"mu", to_json(l.mu)}, {"count", l.count}});
  j["notes"] = r.notes;
  return j;
}

Json to_json(const CircleClass& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  if (c.kind == CircleClass::Kind::Interval) {
    j["theta0"] = c.theta0;
    j["theta1"] = c.theta1;
  } else if (c.kind == CircleClass::Kind::Cover) {
    j["m"] = c.m;
  } else {
    j["theta0"] = c.theta0;
  }
  return j;
}

ExampleSpec example_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  ExampleSpec s{family_from_json(j, ""), optional_int(j, "resolution", 512, "")};
  if (s.resolution < 16) fail("/resolution", "must be at least 16");
  return s;
}

}  // namespace mcone
