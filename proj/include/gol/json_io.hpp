#pragma once

// JSON import/export for structure-constant algebras and Brauer trees.
// The field names are an on-disk contract:
//   algebra: {"p", "dim", "unit", "vertices", "radical_generators", "table"}
//   tree:    {"vertices", "edges", "cyclic", "exceptional"}
// All indices are 0-based. "cyclic" keys are vertex indices as decimal
// strings (JSON object keys are strings). "exceptional" is null when every
// multiplicity is 1; a document with "mu": 1 normalizes to null on import.
// Import re-validates everything and reports the path of the bad field.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gol/algebra.hpp"
#include "gol/brauer.hpp"

namespace gol {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_field(const std::string& path, const std::string& what) {
  throw std::invalid_argument(path + ": " + what);
}

inline const Json& json_member(const Json& j, const std::string& path, const char* name) {
  if (!j.is_object()) bad_field(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) bad_field(path, "missing field \"" + std::string(name) + "\"");
  return *it;
}

inline i64 json_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad_field(path, "expected an integer");
  return j.get<i64>();
}

inline i64 json_int_in(const Json& j, const std::string& path, i64 lo, i64 hi) {
  i64 v = json_int(j, path);
  if (v < lo || v > hi)
    bad_field(path, "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

// Coefficient vector of fixed length; entries are normalized mod m.
inline Vec json_vec(const Json& j, const std::string& path, int dim, i64 m) {
  if (!j.is_array() || int(j.size()) != dim)
    bad_field(path, "expected an array of " + std::to_string(dim) + " integers");
  Vec v(dim, 0);
  for (int i = 0; i < dim; ++i) v[i] = nrm(json_int(j[i], path + "[" + std::to_string(i) + "]"), m);
  return v;
}

}  // namespace detail

// ----- algebras -----

inline Json algebra_to_json(const BasisAlgebra& a) {
  if (!a.ring.is_field()) throw std::invalid_argument("algebra_to_json: base ring must be F_p");
  Json j;
  j["p"] = a.ring.p;
  j["dim"] = a.dim;
  j["unit"] = a.unit;
  j["vertices"] = a.vertices;
  j["radical_generators"] = a.radical_gens;
  j["table"] = a.table;
  return j;
}

// Full re-validation: shapes first (errors carry the field path), then the
// algebra axioms via check_algebra. The result is safe to compute with.
inline BasisAlgebra algebra_from_json(const Json& j) {
  const std::string root = "algebra";
  const i64 p = detail::json_int(detail::json_member(j, root, "p"), root + ".p");
  if (!is_prime(p)) detail::bad_field(root + ".p", "expected a prime");
  const int dim = int(detail::json_int_in(detail::json_member(j, root, "dim"), root + ".dim", 1, 4096));

  BasisAlgebra a;
  a.ring = Ring::fp(p);
  a.dim = dim;
  a.unit = detail::json_vec(detail::json_member(j, root, "unit"), root + ".unit", dim, p);

  const Json& jv = detail::json_member(j, root, "vertices");
  if (!jv.is_array() || jv.empty()) detail::bad_field(root + ".vertices", "expected a nonempty array");
  for (std::size_t i = 0; i < jv.size(); ++i)
    a.vertices.push_back(detail::json_vec(jv[i], root + ".vertices[" + std::to_string(i) + "]", dim, p));

  const Json& jr = detail::json_member(j, root, "radical_generators");
  if (!jr.is_array()) detail::bad_field(root + ".radical_generators", "expected an array");
  for (std::size_t i = 0; i < jr.size(); ++i)
    a.radical_gens.push_back(
        detail::json_vec(jr[i], root + ".radical_generators[" + std::to_string(i) + "]", dim, p));

  const Json& jt = detail::json_member(j, root, "table");
  if (!jt.is_array() || int(jt.size()) != dim)
    detail::bad_field(root + ".table", "expected an array of " + std::to_string(dim) + " rows");
  a.table.assign(dim, std::vector<Vec>(dim));
  for (int i = 0; i < dim; ++i) {
    const std::string rpath = root + ".table[" + std::to_string(i) + "]";
    if (!jt[i].is_array() || int(jt[i].size()) != dim)
      detail::bad_field(rpath, "expected an array of " + std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k)
      a.table[i][k] = detail::json_vec(jt[i][k], rpath + "[" + std::to_string(k) + "]", dim, p);
  }

  CheckReport rep = check_algebra(a);
  if (!rep.ok) {
    std::string msg = "algebra document fails structural checks:";
    for (const auto& f : rep.failures) msg += "\n  " + f;
    throw std::invalid_argument(msg);
  }
  return a;
}

// ----- Brauer trees -----

inline Json tree_to_json(const BrauerTree& t) {
  Json j;
  j["vertices"] = t.vertices;
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back(Json::array({e[0], e[1]}));
  j["edges"] = edges;
  Json cyc = Json::object();
  for (int v = 0; v < t.vertices; ++v) cyc[std::to_string(v)] = t.cyclic[v];
  j["cyclic"] = cyc;
  if (t.exceptional_vertex < 0)
    j["exceptional"] = nullptr;
  else
    j["exceptional"] = Json{{"vertex", t.exceptional_vertex}, {"mu", t.multiplicity}};
  return j;
}

inline BrauerTree tree_from_json(const Json& j) {
  const std::string root = "tree";
  BrauerTree t;
  t.vertices = int(detail::json_int_in(detail::json_member(j, root, "vertices"), root + ".vertices", 1, 4096));

  const Json& je = detail::json_member(j, root, "edges");
  if (!je.is_array()) detail::bad_field(root + ".edges", "expected an array");
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string epath = root + ".edges[" + std::to_string(i) + "]";
    if (!je[i].is_array() || je[i].size() != 2) detail::bad_field(epath, "expected a pair of vertices");
    int v = int(detail::json_int_in(je[i][0], epath + "[0]", 0, t.vertices - 1));
    int w = int(detail::json_int_in(je[i][1], epath + "[1]", 0, t.vertices - 1));
    t.edges.push_back({v, w});
  }

  const Json& jc = detail::json_member(j, root, "cyclic");
  if (!jc.is_object()) detail::bad_field(root + ".cyclic", "expected an object keyed by vertex");
  if (int(jc.size()) != t.vertices)
    detail::bad_field(root + ".cyclic", "expected one key per vertex, 0 .. " + std::to_string(t.vertices - 1));
  t.cyclic.assign(t.vertices, {});
  for (int v = 0; v < t.vertices; ++v) {
    const std::string key = std::to_string(v);
    const std::string cpath = root + ".cyclic[\"" + key + "\"]";
    auto it = jc.find(key);
    if (it == jc.end()) detail::bad_field(root + ".cyclic", "missing key \"" + key + "\"");
    if (!it->is_array()) detail::bad_field(cpath, "expected an array of edge indices");
    for (std::size_t s = 0; s < it->size(); ++s)
      t.cyclic[v].push_back(int(detail::json_int_in(
          (*it)[s], cpath + "[" + std::to_string(s) + "]", 0, i64(t.edges.size()) - 1)));
  }

  const Json& jx = detail::json_member(j, root, "exceptional");
  if (jx.is_null()) {
    t.exceptional_vertex = -1;
    t.multiplicity = 1;
  } else {
    const std::string xpath = root + ".exceptional";
    t.exceptional_vertex =
        int(detail::json_int_in(detail::json_member(jx, xpath, "vertex"), xpath + ".vertex", 0, t.vertices - 1));
    t.multiplicity =
        detail::json_int_in(detail::json_member(jx, xpath, "mu"), xpath + ".mu", 1, i64(1) << 20);
    if (t.multiplicity == 1) t.exceptional_vertex = -1;  // mu = 1 means no exceptional vertex
  }

  validate_tree(t);
  return t;
}

// ----- files -----

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_json: cannot open " + path);
  Json j;
  in >> j;  // parse errors surface as nlohmann exceptions with position info
  return j;
}

inline void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_json: cannot open " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("save_json: write failed for " + path);
}

}  // namespace gol
