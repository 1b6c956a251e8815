#pragma once

// Basic algebras kQ/I with I generated by paths (monomial relations). For such
// algebras the paths avoiding every relation form a k-basis, so dim e_i A e_j
// is a path count.

#include "grk/abelian.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace grk {

struct Arrow {
  std::string name;
  std::string from;
  std::string to;
};

struct QuiverAlgebra {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  /// Each relation is an arrow-name sequence of length >= 2, read left to
  /// right: [a, b] is "a, then b".
  std::vector<std::vector<std::string>> relations;

  /// Throws MalformedInput on duplicate names, dangling arrows, short or
  /// non-composable relations.
  void validate() const;
};

/// A path of the quiver; length zero paths are the vertex idempotents.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;  // indices into QuiverAlgebra::arrows
};

/// "e_1" for idempotents, "a*b" otherwise.
std::string describe_path(const QuiverAlgebra& q, const Path& p);

/// Every path containing no relation as a contiguous subpath.
///
/// Throws InfiniteDimensional, carrying a productive cycle, when there are
/// infinitely many such paths.
std::vector<Path> nonzero_paths(const QuiverAlgebra& q);

/// Entry (i, j) counts nonzero paths from vertex i to vertex j.
IntMatrix cartan_matrix(const QuiverAlgebra& q);

struct CartanReport {
  IntMatrix matrix;
  std::vector<Integer> invariant_factors;
  Integer determinant;
  /// Number of subgroups of the cokernel; std::nullopt means infinitely many.
  std::optional<Integer> count;
  /// Product of d(m_i) over the invariant factors when the determinant is
  /// nonzero. Equals `count` exactly when the cokernel is cyclic; for
  /// non-cyclic cokernels it only counts the product subgroups.
  std::optional<Integer> divisor_product;
  /// Z^n modulo the row lattice of the matrix.
  FgAbelianGroup cokernel;
};

/// Counting report for an arbitrary square integer matrix.
///
/// A cyclic cokernel is counted by the divisor formula; otherwise subgroups
/// are enumerated, which throws BoundExceeded past limits.order_bound.
CartanReport cartan_report(const IntMatrix& matrix, const EnumerationLimits& limits = {});

/// Number of dense resolving subcategories of mod A from its Cartan matrix.
CartanReport dense_resolving_count(const QuiverAlgebra& q, const EnumerationLimits& limits = {});

}  // namespace grk
