#pragma once

// Finitely generated abelian groups presented as Z^n modulo a relation
// lattice L. Subgroups are intermediate lattices L <= M <= Z^n, so the finite
// and the Z-plus-torsion cases share one representation.

#include "grk/intlinalg.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grk {

/// Invariant-factor decomposition Z^free_rank + Z/t_1 + ... + Z/t_k with t_i | t_{i+1}, t_i >= 2.
struct GroupStructure {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  bool is_finite() const noexcept { return free_rank == 0; }
  /// Product of the torsion factors when finite.
  std::optional<Integer> order() const;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// "Z^2 + Z/2 + Z/4"; the trivial group is "0".
std::string to_string(const GroupStructure& s);

/// A coset representative in Z^n.
struct GroupElement {
  IntVector coordinates;

  static GroupElement of(std::initializer_list<long> coords);
  std::size_t size() const noexcept { return coordinates.size(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class FgAbelianGroup {
 public:
  /// The trivial group on zero generators.
  FgAbelianGroup() : FgAbelianGroup(0, IntMatrix(0, 0)) {}
  /// Z^ambient_rank modulo the row lattice of `relations`.
  FgAbelianGroup(std::size_t ambient_rank, const IntMatrix& relations);

  static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, IntMatrix(0, rank)); }

  std::size_t ambient_rank() const noexcept { return rank_; }
  /// Canonical Hermite basis of the relation lattice (zero rows dropped).
  const IntMatrix& relation_lattice() const noexcept { return relations_; }

  GroupStructure structure() const;

  /// Canonical coset representative.
  GroupElement normalize(const GroupElement& e) const;
  bool equal(const GroupElement& a, const GroupElement& b) const;
  bool is_zero(const GroupElement& e) const;
  GroupElement zero() const { return {IntVector(rank_)}; }
  GroupElement generator(std::size_t i) const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  void check(const GroupElement& e) const;

  std::size_t rank_;
  IntMatrix relations_;
};

/// An intermediate lattice M in Z^n, stored in canonical Hermite form.
///
/// Equal lattices have identical representations, so == and < compare
/// subgroups structurally.
class Subgroup {
 public:
  Subgroup() = default;
  /// Lattice spanned by the rows of `spanning`.
  Subgroup(std::size_t ambient_rank, const IntMatrix& spanning);

  std::size_t ambient_rank() const noexcept { return rank_; }
  const IntMatrix& lattice() const noexcept { return lattice_; }

  /// True iff every row of `rows` lies in this lattice.
  bool includes(const IntMatrix& rows) const;
  bool includes(const Subgroup& other) const { return includes(other.lattice_); }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    return a.rank_ != b.rank_ ? a.rank_ < b.rank_ : lex_less(a.lattice_, b.lattice_);
  }

 private:
  std::size_t rank_ = 0;
  IntMatrix lattice_;
};

/// Sum of two subgroups.
Subgroup join(const Subgroup& a, const Subgroup& b);

struct EnumerationLimits {
  /// Largest group order enumerate_subgroups will scan.
  Integer order_bound = 1'000'000;
};

FgAbelianGroup group_from_relations(std::size_t n, const IntMatrix& relations);
GroupStructure invariant_factors(const FgAbelianGroup& g);
/// A finitely generated abelian group has finitely many subgroups iff it is finite.
bool has_finitely_many_subgroups(const FgAbelianGroup& g);

/// The subgroup generated by `gens`; always contains the relation lattice.
Subgroup subgroup_generated(const FgAbelianGroup& g, std::span<const GroupElement> gens);
bool contains(const Subgroup& h, const GroupElement& e);
/// True iff `h` contains the relation lattice of `g`, i.e. is a subgroup of g.
bool is_subgroup_of(const Subgroup& h, const FgAbelianGroup& g);
/// Z^n / M. Representatives pass through unchanged.
FgAbelianGroup quotient(const FgAbelianGroup& g, const Subgroup& h);
/// Index of h in g, or std::nullopt when infinite.
std::optional<Integer> index(const FgAbelianGroup& g, const Subgroup& h);

/// One canonical representative per element of a finite group.
std::vector<GroupElement> list_elements(const FgAbelianGroup& g, const EnumerationLimits& limits = {});

/// All subgroups of a finite group, ordered by canonical lattice.
///
/// Throws InfiniteGroup when free rank is positive and BoundExceeded when the
/// order exceeds limits.order_bound.
std::vector<Subgroup> enumerate_subgroups(const FgAbelianGroup& g, const EnumerationLimits& limits = {});

/// All subgroups of g containing n, ordered as enumerate_subgroups(quotient(g, n)).
///
/// Throws InfinitelyMany (with the quotient's structure) when g/n is infinite.
std::vector<Subgroup> subgroups_containing(const FgAbelianGroup& g, const Subgroup& n,
                                           const EnumerationLimits& limits = {});

/// Number of positive divisors of l. Throws std::invalid_argument for l <= 0.
std::uint64_t count_divisors(const Integer& l);

}  // namespace grk
