#pragma once

// Grothendieck groups of the simple surface singularities and the number of
// dense resolving subcategories of mod R for each. The stored counts are the
// expected answers; `recompute` derives them again through subgroup
// enumeration.

#include "grk/abelian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grk::cli {

struct SingularityEntry {
  std::string type_tag;  // a_n, d_n_even, d_n_odd, e6, e7, e8
  std::optional<long> parameter;
  /// K0(mod R) on generators ([R], torsion generators...).
  FgAbelianGroup k0;
  /// The class of R, the free generator.
  GroupElement designated;
  Integer expected_count;
  /// How the expected count reads in the table: "d(6)" or "5".
  std::string expected_text;

  /// "a_5", "d_6", "e7".
  std::string label() const;
};

/// Throws std::invalid_argument for an unknown tag or an out-of-range n.
/// Accepted tags: a_n, d_n (parity picks the row), d_n_even, d_n_odd, e6, e7, e8.
SingularityEntry singularity(const std::string& type, std::optional<long> n);

/// a_1 .. a_max_n, d_4 .. d_max_n, e6, e7, e8.
std::vector<SingularityEntry> singularity_table(long max_n);

/// Number of subgroups of K0 containing [R].
Integer recompute(const SingularityEntry& e);

}  // namespace grk::cli
