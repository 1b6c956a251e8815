#pragma once

// JSON readers and writers for the file formats shared by the library and the
// command-line tool.
//
//   matrix        [[2, 4], [6, 8]]            entries are integers or decimal strings
//   group         {"ambient_rank": n, "relations": [[...]], "generators": [[...]]}
//   presentation  {"indecomposables": [...], "ses": [{"sub": {...}, "mid": {...}, "ext": {...}}],
//                  "generators": [{...}], "ses_complete_bound": B, "include_split": bool}
//   quiver        {"vertices": [...], "arrows": [{"name", "from", "to"}], "relations": [[...]]}

#include "grk/abelian.hpp"
#include "grk/cartan.hpp"
#include "grk/excat.hpp"
#include "grk/intlinalg.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <vector>

namespace grk {

using Json = nlohmann::ordered_json;

/// Parses a file as JSON; throws ParseError with the path on failure.
Json read_json_file(const std::filesystem::path& path);

IntMatrix matrix_from_json(const Json& j);
/// A matrix with exactly `cols` columns; an empty array is the 0 x cols matrix.
IntMatrix matrix_from_json(const Json& j, std::size_t cols);
IntVector vector_from_json(const Json& j);

struct GroupSpec {
  FgAbelianGroup group;
  std::vector<GroupElement> generators;
};

GroupSpec group_from_json(const Json& j);
ExactCatPresentation presentation_from_json(const Json& j);
QuiverAlgebra quiver_from_json(const Json& j);

/// Integers that fit in 64 bits are emitted as numbers, larger ones as strings.
Json integer_to_json(const Integer& x);
Json to_json(std::span<const Integer> v);
Json to_json(const IntMatrix& m);
Json to_json(const GroupStructure& s);
Json to_json(const Subgroup& h);
Json group_to_json(const FgAbelianGroup& g, std::span<const GroupElement> generators = {});

}  // namespace grk
