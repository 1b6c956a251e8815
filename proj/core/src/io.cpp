#include "grk/io.hpp"

#include "grk/errors.hpp"

#include <fstream>
#include <limits>
#include <set>

namespace grk {

namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || x.set_str(s, 10) != 0) throw ParseError("not a decimal integer: \"" + s + "\"");
    return x;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

std::int64_t multiplicity_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": multiplicity must be an integer, got " + j.dump());
  auto x = j.get<std::int64_t>();
  if (x < 0) throw ParseError(where + ": multiplicity must be nonnegative, got " + std::to_string(x));
  return x;
}

const Json& require(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(what + " is missing \"" + key + "\"");
  return *it;
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + " must be a string, got " + j.dump());
  return j.get<std::string>();
}

Multiplicities object_from_json(const Json& j, const std::vector<std::string>& names, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be an object mapping indecomposables to multiplicities");
  Multiplicities v(names.size(), 0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto pos = std::find(names.begin(), names.end(), it.key());
    if (pos == names.end()) throw ParseError(where + ": unknown indecomposable \"" + it.key() + "\"");
    v[static_cast<std::size_t>(pos - names.begin())] = multiplicity_from_json(it.value(), where + "." + it.key());
  }
  return v;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers, got " + j.dump());
  IntVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a matrix must be an array of rows");
  if (j.empty()) return IntMatrix(0, 0);
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw ParseError("matrix is not rectangular: row 0 has " + std::to_string(cols) + " entries, row " +
                       std::to_string(i) + " has " + std::to_string(rows[i].size()));
    }
  }
  return IntMatrix::from_rows(cols, rows);
}

IntMatrix matrix_from_json(const Json& j, std::size_t cols) {
  IntMatrix m = matrix_from_json(j);
  if (m.rows() == 0) return IntMatrix(0, cols);
  if (m.cols() != cols) {
    throw ParseError("expected rows of length " + std::to_string(cols) + ", got " + std::to_string(m.cols()));
  }
  return m;
}

GroupSpec group_from_json(const Json& j) {
  const Json& rank_json = require(j, "ambient_rank", "group");
  if (!rank_json.is_number_integer() || rank_json.get<std::int64_t>() < 0)
    throw ParseError("ambient_rank must be a nonnegative integer");
  const auto n = static_cast<std::size_t>(rank_json.get<std::int64_t>());
  IntMatrix relations(0, n);
  if (auto it = j.find("relations"); it != j.end()) relations = matrix_from_json(*it, n);
  GroupSpec spec{FgAbelianGroup(n, relations), {}};
  if (auto it = j.find("generators"); it != j.end()) {
    IntMatrix gens = matrix_from_json(*it, n);
    for (std::size_t r = 0; r < gens.rows(); ++r) spec.generators.push_back({gens.row_vector(r)});
  }
  return spec;
}

ExactCatPresentation presentation_from_json(const Json& j) {
  ExactCatPresentation p;
  const Json& names = require(j, "indecomposables", "presentation");
  if (!names.is_array()) throw ParseError("indecomposables must be an array of names");
  for (std::size_t i = 0; i < names.size(); ++i)
    p.indecomposables.push_back(string_from_json(names[i], "indecomposables[" + std::to_string(i) + "]"));

  if (auto it = j.find("ses"); it != j.end()) {
    if (!it->is_array()) throw ParseError("ses must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& s = (*it)[i];
      const std::string where = "ses[" + std::to_string(i) + "]";
      p.ses.push_back({object_from_json(require(s, "sub", where), p.indecomposables, where + ".sub"),
                       object_from_json(require(s, "mid", where), p.indecomposables, where + ".mid"),
                       object_from_json(require(s, "ext", where), p.indecomposables, where + ".ext")});
    }
  }
  if (auto it = j.find("generators"); it != j.end()) {
    if (!it->is_array()) throw ParseError("generators must be an array of objects");
    for (std::size_t i = 0; i < it->size(); ++i)
      p.generators.push_back(
          object_from_json((*it)[i], p.indecomposables, "generators[" + std::to_string(i) + "]"));
  }
  if (auto it = j.find("ses_complete_bound"); it != j.end() && !it->is_null())
    p.ses_complete_bound = multiplicity_from_json(*it, "ses_complete_bound");

  bool include_split = false;
  if (auto it = j.find("include_split"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("include_split must be true or false");
    include_split = it->get<bool>();
  }
  if (include_split) {
    if (!p.ses_complete_bound) throw ParseError("include_split requires ses_complete_bound");
    append_split_sequences(p, *p.ses_complete_bound);
  }
  try {
    p.validate();
  } catch (const MalformedInput& e) {
    throw ParseError(e.what());
  }
  return p;
}

QuiverAlgebra quiver_from_json(const Json& j) {
  QuiverAlgebra q;
  const Json& vertices = require(j, "vertices", "quiver");
  if (!vertices.is_array()) throw ParseError("vertices must be an array of names");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    q.vertices.push_back(string_from_json(vertices[i], "vertices[" + std::to_string(i) + "]"));

  if (auto it = j.find("arrows"); it != j.end()) {
    if (!it->is_array()) throw ParseError("arrows must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& a = (*it)[i];
      const std::string where = "arrows[" + std::to_string(i) + "]";
      q.arrows.push_back({string_from_json(require(a, "name", where), where + ".name"),
                          string_from_json(require(a, "from", where), where + ".from"),
                          string_from_json(require(a, "to", where), where + ".to")});
    }
  }
  if (auto it = j.find("relations"); it != j.end()) {
    if (!it->is_array()) throw ParseError("relations must be an array of paths");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& r = (*it)[i];
      const std::string where = "relations[" + std::to_string(i) + "]";
      if (!r.is_array() || !std::all_of(r.begin(), r.end(), [](const Json& x) { return x.is_string(); })) {
        throw ParseError(where + ": only monomial relations (arrays of arrow names) are supported");
      }
      q.relations.push_back(r.get<std::vector<std::string>>());
    }
  }
  try {
    q.validate();
  } catch (const MalformedInput& e) {
    throw ParseError(e.what());
  }
  return q;
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const GroupStructure& s) {
  Json out;
  out["torsion"] = to_json(s.torsion);
  out["free_rank"] = s.free_rank;
  out["finite"] = s.is_finite();
  if (auto o = s.order()) out["order"] = integer_to_json(*o);
  out["text"] = to_string(s);
  return out;
}

Json to_json(const Subgroup& h) {
  Json out;
  out["ambient_rank"] = h.ambient_rank();
  out["lattice"] = to_json(h.lattice());
  return out;
}

Json group_to_json(const FgAbelianGroup& g, std::span<const GroupElement> generators) {
  Json out;
  out["ambient_rank"] = g.ambient_rank();
  out["relations"] = to_json(g.relation_lattice());
  Json gens = Json::array();
  for (const auto& e : generators) gens.push_back(to_json(e.coordinates));
  out["generators"] = gens;
  return out;
}

}  // namespace grk
