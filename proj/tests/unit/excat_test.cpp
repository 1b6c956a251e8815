#include "grk/errors.hpp"
#include "grk/excat.hpp"
#include "grk/io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace grk {
namespace {

ExactCatPresentation a1() { return presentation_from_json(read_json_file(GRK_DATA_DIR "/a1_cm.json")); }

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

ExactCatPresentation free_presentation(std::size_t n) {
  ExactCatPresentation p;
  for (std::size_t i = 0; i < n; ++i) p.indecomposables.push_back("X" + std::to_string(i));
  return p;
}

TEST(K0, A1IsZPlusZ2) {
  auto k = k0(a1());
  EXPECT_EQ(k.group.structure(), (GroupStructure{ints({2}), 1}));
  // 2[I] = 2[R]
  EXPECT_TRUE(k.group.equal(k.class_of(Multiplicities{0, 2}), k.class_of(Multiplicities{2, 0})));
  EXPECT_FALSE(k.group.equal(k.class_of(Multiplicities{0, 1}), k.class_of(Multiplicities{1, 0})));
}

TEST(K0, FreeWithoutRelations) {
  EXPECT_EQ(k0(free_presentation(3)).group.structure(), (GroupStructure{{}, 3}));

  auto p = free_presentation(2);
  p.ses.push_back({{1, 0}, {1, 1}, {0, 1}});  // split
  p.ses.push_back({{0, 0}, {2, 3}, {2, 3}});
  EXPECT_EQ(k0(p).group.structure(), (GroupStructure{{}, 2}));
}

TEST(K0, IndependentOfOrderAndDuplicates) {
  auto p = a1();
  auto reference = k0(p).group;
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    auto q = p;
    std::shuffle(q.ses.begin(), q.ses.end(), rng);
    q.ses.push_back(q.ses.front());
    q.ses.push_back(q.ses.back());
    EXPECT_EQ(k0(q).group, reference);
  }
}

TEST(K0, RelationsVanish) {
  auto p = a1();
  auto k = k0(p);
  for (const auto& s : p.ses) {
    GroupElement e = k.class_of(s.sub);
    auto mid = k.class_of(s.mid), ext = k.class_of(s.ext);
    for (std::size_t i = 0; i < e.size(); ++i) e.coordinates[i] += ext.coordinates[i] - mid.coordinates[i];
    EXPECT_TRUE(k.group.is_zero(e));
  }
}

TEST(K0, RejectsMalformedVectors) {
  auto p = free_presentation(2);
  p.ses.push_back({{1}, {1, 0}, {0, 0}});
  EXPECT_THROW(k0(p), MalformedInput);
  auto q = free_presentation(2);
  q.generators.push_back({-1, 0});
  EXPECT_THROW(k0(q), MalformedInput);
}

TEST(GeneratorImage, Examples) {
  auto p = a1();
  auto k = k0(p);
  auto image = generator_image(p, k);
  EXPECT_EQ(index(k.group, image), Integer(2));

  auto f = free_presentation(2);
  f.generators = {{1, 0}, {0, 1}};
  auto kf = k0(f);
  EXPECT_EQ(generator_image(f, kf).lattice(), IntMatrix::identity(2));
  f.generators.clear();
  EXPECT_EQ(generator_image(f, kf).lattice().rows(), 0u);
}

TEST(Classify, A1HasTwoClassesInBothVariants) {
  auto p = a1();
  auto res = classify(p, Variant::resolving);
  auto cores = classify(p, Variant::coresolving);
  ASSERT_EQ(res.size(), 2u);
  EXPECT_EQ(res, cores);
  EXPECT_EQ(res[0].subgroup.lattice(), IntMatrix::identity(2));
  EXPECT_EQ(res[1].subgroup.lattice(), (IntMatrix{{1, 0}, {0, 2}}));
}

TEST(Classify, FullGeneratorImageGivesOneClass) {
  auto p = a1();
  p.generators.push_back({0, 1});
  EXPECT_EQ(classify(p, Variant::resolving).size(), 1u);
}

TEST(Classify, InfiniteQuotientIsReported) {
  auto p = free_presentation(2);
  p.generators = {{1, 0}};
  try {
    classify(p, Variant::resolving);
    FAIL() << "expected InfinitelyMany";
  } catch (const InfinitelyMany& e) {
    EXPECT_EQ(e.free_rank(), 1u);
    EXPECT_TRUE(e.torsion().empty());
  }
}

TEST(Classify, EmptyPresentationHasOneClass) {
  ExactCatPresentation p;
  EXPECT_EQ(k0(p).group.structure(), (GroupStructure{{}, 0}));
  EXPECT_EQ(classify(p, Variant::resolving).size(), 1u);
}

TEST(GMembership, A1NontrivialClassIsEvenI) {
  auto p = a1();
  auto k = k0(p);
  auto classes = classify(p, Variant::resolving);
  for (std::int64_t a = 0; a <= 10; ++a)
    for (std::int64_t m = 0; m <= 10; ++m) {
      EXPECT_EQ(g_membership(k, classes[1], Multiplicities{a, m}), m % 2 == 0);
      EXPECT_TRUE(g_membership(k, classes[0], Multiplicities{a, m}));
    }
  for (const auto& c : classes) {
    EXPECT_TRUE(g_membership(p, c, Multiplicities{0, 0}));
    for (const auto& g : p.generators) EXPECT_TRUE(g_membership(p, c, g));
  }
  EXPECT_THROW(g_membership(p, classes[0], Multiplicities{1, 2, 3}), DimensionMismatch);
}

TEST(GMembership, ClosedUnderSequencesAndSums) {
  auto p = a1();
  auto k = k0(p);
  for (const auto& c : classify(p, Variant::resolving)) {
    for (const auto& s : p.ses) {
      const int members = g_membership(k, c, s.sub) + g_membership(k, c, s.mid) + g_membership(k, c, s.ext);
      EXPECT_NE(members, 2);
    }
    for (std::int64_t a = 0; a < 4; ++a)
      for (std::int64_t b = 0; b < 4; ++b) {
        Multiplicities v{a, b}, w{b, a};
        if (g_membership(k, c, v) && g_membership(k, c, w)) EXPECT_TRUE(g_membership(k, c, Multiplicities{a + b, a + b}));
      }
  }
}

TEST(FSubgroup, RoundTripsBoundedMembers) {
  auto p = a1();
  auto k = k0(p);
  std::vector<Multiplicities> none;
  EXPECT_EQ(f_subgroup(p, none), subgroup_generated(k.group, std::vector<GroupElement>{}));
  std::vector<Multiplicities> indecs{{1, 0}, {0, 1}};
  EXPECT_EQ(f_subgroup(p, indecs).lattice(), IntMatrix::identity(2));

  for (const auto& c : classify(p, Variant::resolving)) {
    std::vector<Multiplicities> members;
    for (std::int64_t a = 0; a <= 4; ++a)
      for (std::int64_t m = 0; m <= 4; ++m)
        if (g_membership(k, c, Multiplicities{a, m})) members.push_back({a, m});
    EXPECT_EQ(f_subgroup(p, members), c.subgroup);
  }
}

TEST(VerifyBijection, A1PassesAtBoundFour) {
  auto report = verify_bijection(a1(), 4);
  EXPECT_TRUE(report.passed());
  ASSERT_EQ(report.classes.size(), 2u);
  EXPECT_EQ(report.classes[0].members.size(), 25u);
  EXPECT_EQ(report.classes[1].members.size(), 15u);
  for (const auto& v : report.classes[1].members) EXPECT_EQ(v[1] % 2, 0);
}

TEST(VerifyBijection, BoundZeroIsVacuous) {
  auto report = verify_bijection(a1(), 0);
  EXPECT_TRUE(report.passed());
  for (const auto& c : report.classes) EXPECT_EQ(c.members, (std::vector<Multiplicities>{{0, 0}}));
  // Both classes contain only the zero object, so round trips are not checked.
  EXPECT_FALSE(report.roundtrip_checked);
  EXPECT_EQ(report.roundtrip_threshold, 2);
  EXPECT_TRUE(verify_bijection(a1(), 2).roundtrip_checked);
}

TEST(VerifyBijection, IncompleteSesIsRejected) {
  EXPECT_THROW(verify_bijection(a1(), 5), IncompleteSes);
  auto p = a1();
  p.ses_complete_bound.reset();
  EXPECT_THROW(verify_bijection(p, 1), IncompleteSes);
}

TEST(VerifyBijection, DroppingTheRelationFailsRoundTrip) {
  // The generator image computed without the I >-> R^2 ->> I relation.
  auto p = a1();
  auto broken = p;
  broken.ses.clear();
  auto kb = k0(broken);
  std::vector<Subgroup> candidates{generator_image(broken, kb)};
  auto report = verify_classes(p, 4, candidates);
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.classes[0].f_of_g);
}

TEST(VerifyGenerator, Examples) {
  EXPECT_TRUE(verify_generator(a1()));

  auto none = a1();
  none.generators.clear();
  EXPECT_FALSE(verify_generator(none));

  auto everything = free_presentation(2);
  everything.ses_complete_bound = 2;
  append_split_sequences(everything, 2);
  for (std::int64_t a = 0; a <= 2; ++a)
    for (std::int64_t b = 0; b <= 2; ++b) everything.generators.push_back({a, b});
  EXPECT_TRUE(verify_generator(everything));

  auto unbounded = a1();
  unbounded.ses_complete_bound.reset();
  EXPECT_THROW(verify_generator(unbounded), IncompleteSes);
}

TEST(DescribeObject, Formats) {
  auto p = a1();
  EXPECT_EQ(describe_object(p, Multiplicities{0, 0}), "0");
  EXPECT_EQ(describe_object(p, Multiplicities{2, 1}), "R^2 + I");
}

}  // namespace
}  // namespace grk
