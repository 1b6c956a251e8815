#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace grk {

/// Operand shapes do not agree (vector length, column count, ambient rank).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structurally invalid input: negative multiplicities, unknown names, bad relations.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// JSON input could not be turned into a domain value.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subgroup enumeration was asked for a group with positive free rank.
///
/// Carries the invariant structure of the offending group so callers can
/// report it.
class InfiniteGroup : public std::runtime_error {
 public:
  InfiniteGroup(const std::string& what, std::vector<mpz_class> torsion, std::size_t free_rank)
      : std::runtime_error(what), torsion_(std::move(torsion)), free_rank_(free_rank) {}

  const std::vector<mpz_class>& torsion() const noexcept { return torsion_; }
  std::size_t free_rank() const noexcept { return free_rank_; }

 private:
  std::vector<mpz_class> torsion_;
  std::size_t free_rank_;
};

/// The quotient by a subgroup is infinite, so infinitely many intermediate
/// subgroups exist.
class InfinitelyMany : public InfiniteGroup {
 public:
  using InfiniteGroup::InfiniteGroup;
};

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The presentation's SES list is not asserted complete up to the requested bound.
class IncompleteSes : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quiver with monomial relations admits arbitrarily long nonzero paths.
class InfiniteDimensional : public std::runtime_error {
 public:
  InfiniteDimensional(const std::string& what, std::vector<std::string> cycle)
      : std::runtime_error(what), cycle_(std::move(cycle)) {}

  /// Arrow names of a cycle that can be traversed forever without completing a relation.
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

}  // namespace grk
