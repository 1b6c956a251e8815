#include "grk/abelian.hpp"

#include "grk/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grk {

std::optional<Integer> GroupStructure::order() const {
  if (free_rank != 0) return std::nullopt;
  Integer o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string to_string(const GroupStructure& s) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (s.free_rank == 1) {
    sep();
    os << "Z";
  } else if (s.free_rank > 1) {
    sep();
    os << "Z^" << s.free_rank;
  }
  // Equal consecutive factors are grouped: Z/2 + Z/2 -> (Z/2)^2.
  for (std::size_t i = 0; i < s.torsion.size();) {
    std::size_t j = i;
    while (j < s.torsion.size() && s.torsion[j] == s.torsion[i]) ++j;
    sep();
    if (j - i == 1)
      os << "Z/" << s.torsion[i];
    else
      os << "(Z/" << s.torsion[i] << ")^" << (j - i);
    i = j;
  }
  if (first) os << "0";
  return os.str();
}

GroupElement GroupElement::of(std::initializer_list<long> coords) {
  GroupElement e;
  for (long c : coords) e.coordinates.emplace_back(c);
  return e;
}

FgAbelianGroup::FgAbelianGroup(std::size_t ambient_rank, const IntMatrix& relations)
    : rank_(ambient_rank) {
  if (relations.rows() == 0) {
    relations_ = IntMatrix(0, ambient_rank);
    return;
  }
  if (relations.cols() != ambient_rank) {
    throw DimensionMismatch("relations have " + std::to_string(relations.cols()) +
                            " columns, expected " + std::to_string(ambient_rank));
  }
  relations_ = canonical_basis(relations);
}

GroupStructure FgAbelianGroup::structure() const {
  auto form = snf(relations_);
  GroupStructure s;
  for (const auto& d : form.invariant_factors)
    if (d > 1) s.torsion.push_back(d);
  s.free_rank = rank_ - form.rank;
  return s;
}

void FgAbelianGroup::check(const GroupElement& e) const {
  if (e.size() != rank_) {
    throw DimensionMismatch("element has " + std::to_string(e.size()) +
                            " coordinates, group has ambient rank " + std::to_string(rank_));
  }
}

GroupElement FgAbelianGroup::normalize(const GroupElement& e) const {
  check(e);
  return {reduce_modulo(relations_, e.coordinates)};
}

bool FgAbelianGroup::equal(const GroupElement& a, const GroupElement& b) const {
  return normalize(a) == normalize(b);
}

bool FgAbelianGroup::is_zero(const GroupElement& e) const { return equal(e, zero()); }

GroupElement FgAbelianGroup::generator(std::size_t i) const {
  GroupElement e = zero();
  e.coordinates.at(i) = 1;
  return e;
}

Subgroup::Subgroup(std::size_t ambient_rank, const IntMatrix& spanning) : rank_(ambient_rank) {
  if (spanning.rows() == 0) {
    lattice_ = IntMatrix(0, ambient_rank);
    return;
  }
  if (spanning.cols() != ambient_rank) {
    throw DimensionMismatch("subgroup generators have " + std::to_string(spanning.cols()) +
                            " columns, expected " + std::to_string(ambient_rank));
  }
  lattice_ = canonical_basis(spanning);
}

bool Subgroup::includes(const IntMatrix& rows) const {
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    auto w = reduce_modulo(lattice_, rows.row(r));
    if (!std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; })) return false;
  }
  return true;
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionMismatch("join: ambient ranks differ");
  IntMatrix rows = a.lattice();
  rows.append_rows(b.lattice());
  return Subgroup(a.ambient_rank(), rows);
}

FgAbelianGroup group_from_relations(std::size_t n, const IntMatrix& relations) {
  return FgAbelianGroup(n, relations);
}

GroupStructure invariant_factors(const FgAbelianGroup& g) { return g.structure(); }

bool has_finitely_many_subgroups(const FgAbelianGroup& g) { return g.structure().free_rank == 0; }

Subgroup subgroup_generated(const FgAbelianGroup& g, std::span<const GroupElement> gens) {
  IntMatrix rows = g.relation_lattice();
  for (const auto& e : gens) {
    if (e.size() != g.ambient_rank()) {
      throw DimensionMismatch("generator has " + std::to_string(e.size()) +
                              " coordinates, group has ambient rank " +
                              std::to_string(g.ambient_rank()));
    }
    rows.append_row(e.coordinates);
  }
  return Subgroup(g.ambient_rank(), rows);
}

bool contains(const Subgroup& h, const GroupElement& e) {
  if (e.size() != h.ambient_rank()) {
    throw DimensionMismatch("element has " + std::to_string(e.size()) +
                            " coordinates, subgroup lives in Z^" + std::to_string(h.ambient_rank()));
  }
  auto w = reduce_modulo(h.lattice(), e.coordinates);
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

bool is_subgroup_of(const Subgroup& h, const FgAbelianGroup& g) {
  return h.ambient_rank() == g.ambient_rank() && h.includes(g.relation_lattice());
}

FgAbelianGroup quotient(const FgAbelianGroup& g, const Subgroup& h) {
  if (h.ambient_rank() != g.ambient_rank()) throw DimensionMismatch("quotient: ambient ranks differ");
  if (!h.includes(g.relation_lattice()))
    throw std::invalid_argument("quotient: lattice does not contain the relations of the group");
  return FgAbelianGroup(g.ambient_rank(), h.lattice());
}

std::optional<Integer> index(const FgAbelianGroup& g, const Subgroup& h) {
  return quotient(g, h).structure().order();
}

std::vector<GroupElement> list_elements(const FgAbelianGroup& g, const EnumerationLimits& limits) {
  auto s = g.structure();
  if (!s.is_finite()) {
    throw InfiniteGroup("group " + to_string(s) + " is infinite", s.torsion, s.free_rank);
  }
  if (*s.order() > limits.order_bound) {
    throw BoundExceeded("group order " + s.order()->get_str() + " exceeds the enumeration bound " +
                        limits.order_bound.get_str());
  }
  const std::size_t n = g.ambient_rank();
  // x -> x V carries Z^n / L onto Z^n / rowspace(S) = (+) Z/s_i.
  auto form = snf(g.relation_lattice());
  auto v_inverse = unimodular_inverse(form.V);
  std::vector<Integer> moduli(n);
  for (std::size_t i = 0; i < n; ++i) moduli[i] = form.S(i, i);

  std::vector<GroupElement> out;
  IntVector y(n);
  for (;;) {
    out.push_back(g.normalize({y * *v_inverse}));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++y[i] < moduli[i]) break;
      y[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

std::vector<Subgroup> enumerate_subgroups(const FgAbelianGroup& g, const EnumerationLimits& limits) {
  const auto elements = list_elements(g, limits);

  std::set<Subgroup> found;
  std::deque<Subgroup> pending;
  for (const auto& e : elements) {
    Subgroup c = subgroup_generated(g, std::span(&e, 1));
    if (found.insert(c).second) pending.push_back(std::move(c));
  }
  // Every subgroup of a finite group is a join of cyclic ones, so closing
  // under joins with a single cyclic subgroup reaches all of them.
  const std::vector<Subgroup> cyclic(found.begin(), found.end());
  while (!pending.empty()) {
    Subgroup x = std::move(pending.front());
    pending.pop_front();
    for (const auto& c : cyclic) {
      if (x.includes(c)) continue;
      Subgroup z = join(x, c);
      if (found.insert(z).second) pending.push_back(std::move(z));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Subgroup> subgroups_containing(const FgAbelianGroup& g, const Subgroup& n,
                                           const EnumerationLimits& limits) {
  FgAbelianGroup q = quotient(g, n);
  try {
    // Subgroups of Z^k / N are exactly the lattices between N and Z^k, so the
    // pull-back to g is the identity on lattices.
    return enumerate_subgroups(q, limits);
  } catch (const InfiniteGroup& e) {
    throw InfinitelyMany("quotient " + to_string(q.structure()) +
                             " is infinite; infinitely many subgroups contain the given one",
                         e.torsion(), e.free_rank());
  }
}

std::uint64_t count_divisors(const Integer& l) {
  if (l <= 0) throw std::invalid_argument("count_divisors: argument must be positive, got " + l.get_str());
  Integer rest = l;
  std::uint64_t count = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    std::uint64_t e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (rest > 1) count *= 2;
  return count;
}

}  // namespace grk
