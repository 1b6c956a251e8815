#pragma once

// Finitely presented Krull-Schmidt exact categories and the classification of
// their dense G-(co)resolving subcategories by subgroups of K0 containing the
// image of G.
//
// Objects are multiplicity vectors over the named indecomposables. The user
// supplies the short exact sequences; nothing here derives them.

#include "grk/abelian.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grk {

using Multiplicities = std::vector<std::int64_t>;

struct ShortExactSequence {
  Multiplicities sub;
  Multiplicities mid;
  Multiplicities ext;

  friend bool operator==(const ShortExactSequence&, const ShortExactSequence&) = default;
};

struct ExactCatPresentation {
  std::vector<std::string> indecomposables;
  std::vector<ShortExactSequence> ses;
  /// The family G, as objects.
  std::vector<Multiplicities> generators;
  /// When set, `ses` lists every short exact sequence among objects whose
  /// multiplicities are all at most this value.
  std::optional<std::int64_t> ses_complete_bound;

  std::size_t rank() const noexcept { return indecomposables.size(); }
  /// Throws MalformedInput on wrong lengths, negative entries or duplicate names.
  void validate() const;
};

/// Appends the split sequences a >-> a+c ->> c for every a, c with a+c <= bound.
void append_split_sequences(ExactCatPresentation& p, std::int64_t bound);

/// Renders an object as "R^2 + I", or "0".
std::string describe_object(const ExactCatPresentation& p, std::span<const std::int64_t> object);

struct K0Result {
  /// One free generator per indecomposable modulo [sub] - [mid] + [ext].
  FgAbelianGroup group;

  /// The class of an object: the linear extension of [indecomposable_i] = e_i.
  GroupElement class_of(std::span<const std::int64_t> object) const;
};

struct DenseClass {
  Subgroup subgroup;

  friend bool operator==(const DenseClass&, const DenseClass&) = default;
};

enum class Variant { resolving, coresolving };

K0Result k0(const ExactCatPresentation& p);

Subgroup generator_image(const ExactCatPresentation& p, const K0Result& k);

/// One dense class per subgroup of K0 containing the generator image.
///
/// Dense resolving and dense coresolving subcategories coincide, so both
/// variants run the same computation and return the same list. Throws
/// InfinitelyMany with the structure of K0 / image(G) when that quotient is
/// infinite.
std::vector<DenseClass> classify(const ExactCatPresentation& p, Variant variant,
                                 const EnumerationLimits& limits = {});

/// Membership of an object in the subcategory g(H) = {X : [X] in H}.
bool g_membership(const K0Result& k, const DenseClass& cls, std::span<const std::int64_t> object);
bool g_membership(const ExactCatPresentation& p, const DenseClass& cls,
                  std::span<const std::int64_t> object);

/// f(X) = <[X] : X in objects>, as a subgroup of K0.
Subgroup f_subgroup(const ExactCatPresentation& p, std::span<const Multiplicities> objects);

/// Outcome of the bounded checks for one candidate subgroup H.
struct ClassCheck {
  Subgroup subgroup;
  /// S = objects of g(H) with all multiplicities <= bound, in box order.
  std::vector<Multiplicities> members;
  bool ses_closure = true;   // (a) two terms of a listed SES in S => third in S
  bool sum_closure = true;   // (b) v, w in S and v + w in the box => v + w in S
  bool density = true;       // (c) v <= bound/2 => some v + w in S
  bool f_of_g = true;        // (d) f(S) = H
  bool g_of_f = true;        //     g(f(S)) restricted to the box = S
  bool maximal = true;       //     no v outside S keeps f(S + v) = H
  std::vector<std::string> failures;

  bool passed() const noexcept {
    return ses_closure && sum_closure && density && f_of_g && g_of_f && maximal;
  }
};

struct VerificationReport {
  std::int64_t bound = 0;
  /// f(S) = H only needs to hold once the box holds every generator twice
  /// over, so (d), g(f(S)) = S and (e) are checked only for bound >= this.
  std::int64_t roundtrip_threshold = 0;
  bool roundtrip_checked = true;
  std::vector<ClassCheck> classes;
  bool injective = true;  // (e) distinct H give distinct S
  std::vector<std::string> failures;

  bool passed() const noexcept;
};

/// Bounded brute-force verification of the correspondence on classify(p).
///
/// Throws IncompleteSes unless p.ses_complete_bound >= bound.
VerificationReport verify_bijection(const ExactCatPresentation& p, std::int64_t bound,
                                    const EnumerationLimits& limits = {});

/// The same checks against an arbitrary list of candidate subgroups.
VerificationReport verify_classes(const ExactCatPresentation& p, std::int64_t bound,
                                  std::span<const Subgroup> candidates);

/// Bounded check that G is a generator.
///
/// True iff every object with multiplicities <= ses_complete_bound - (largest
/// generator multiplicity) is a direct sum of end terms of listed sequences
/// whose middle term lies in add(G). Throws IncompleteSes when
/// ses_complete_bound is unset.
bool verify_generator(const ExactCatPresentation& p);

}  // namespace grk
