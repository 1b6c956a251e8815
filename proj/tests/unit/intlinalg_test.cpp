#include "grk/errors.hpp"
#include "grk/intlinalg.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace grk {
namespace {

IntMatrix to_int_matrix(const oracle::SmallMatrix& m) {
  IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = static_cast<long>(m[r][c]);
  return out;
}

bool is_unimodular(const IntMatrix& m) {
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

void expect_hermite_shape(const HermiteForm& f) {
  const IntMatrix& h = f.H;
  std::size_t prev_pivot = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t p = 0;
    while (p < h.cols() && h(r, p) == 0) ++p;
    if (r >= f.rank) {
      EXPECT_EQ(p, h.cols()) << "zero rows must come last";
      continue;
    }
    ASSERT_LT(p, h.cols());
    if (r > 0) EXPECT_GT(p, prev_pivot);
    prev_pivot = p;
    EXPECT_GT(h(r, p), 0);
    for (std::size_t above = 0; above < r; ++above) {
      EXPECT_GE(h(above, p), 0);
      EXPECT_LT(h(above, p), h(r, p));
    }
  }
}

TEST(Hnf, IdentityIsFixed) {
  auto f = hnf(IntMatrix::identity(2));
  EXPECT_EQ(f.H, IntMatrix::identity(2));
  EXPECT_EQ(f.U, IntMatrix::identity(2));
  EXPECT_EQ(f.rank, 2u);
}

TEST(Hnf, TwoByTwoExample) {
  // (6,8) - 3(2,4) = (0,-4); negate, then (2,4) - (0,4) = (2,0).
  IntMatrix a{{2, 4}, {6, 8}};
  auto f = hnf(a);
  EXPECT_EQ(f.H, (IntMatrix{{2, 0}, {0, 4}}));
  EXPECT_EQ(f.U * a, f.H);
  EXPECT_TRUE(is_unimodular(f.U));
}

TEST(Hnf, ZeroRowIsTheZeroLattice) {
  auto f = hnf(IntMatrix(1, 3));
  EXPECT_EQ(f.rank, 0u);
  EXPECT_TRUE(f.H.is_zero());
  EXPECT_EQ(canonical_basis(IntMatrix(1, 3)).rows(), 0u);
  EXPECT_EQ(canonical_basis(IntMatrix(0, 3)).cols(), 3u);
}

TEST(Hnf, RandomMatricesAreCanonicalAndIdempotent) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> shape(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = to_int_matrix(oracle::random_small_matrix(rng, shape(rng), shape(rng), -9, 9));
    auto f = hnf(a);
    EXPECT_EQ(f.U * a, f.H);
    EXPECT_TRUE(is_unimodular(f.U));
    expect_hermite_shape(f);
    EXPECT_EQ(hnf(f.H).H, f.H);

    // Same lattice, different generators: rows shuffled and recombined.
    IntMatrix b = a;
    if (b.rows() > 1) {
      b.swap_rows(0, b.rows() - 1);
      b.add_row_multiple(0, 1, 3);
      b.add_row_multiple(1, 0, -2);
    }
    EXPECT_EQ(canonical_basis(b), canonical_basis(a));
  }
}

TEST(Snf, IdentityScalarAndExample) {
  EXPECT_EQ(snf(IntMatrix::identity(2)).invariant_factors, (std::vector<Integer>{1, 1}));
  EXPECT_EQ(snf(IntMatrix{{7}}).invariant_factors, (std::vector<Integer>{7}));
  EXPECT_EQ(snf(IntMatrix{{-7}}).invariant_factors, (std::vector<Integer>{7}));

  IntMatrix a{{2, 4}, {6, 8}};
  auto oracle = oracle::minor_gcd_invariants({{2, 4}, {6, 8}});
  ASSERT_EQ(oracle, (std::vector<std::int64_t>{2, 4}));
  auto f = snf(a);
  EXPECT_EQ(f.invariant_factors, (std::vector<Integer>{2, 4}));
  EXPECT_EQ(f.U * a * f.V, f.S);
}

TEST(Snf, ZerosComeLast) {
  IntMatrix a{{0, 0, 0}, {0, 6, 0}};
  auto f = snf(a);
  EXPECT_EQ(f.invariant_factors, (std::vector<Integer>{6, 0}));
  EXPECT_EQ(f.rank, 1u);
  EXPECT_EQ(snf(IntMatrix(0, 3)).invariant_factors.size(), 0u);
}

TEST(Snf, RandomMatricesMatchMinorGcdOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> shape(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    auto small = oracle::random_small_matrix(rng, shape(rng), shape(rng), -5, 5);
    auto f = snf(to_int_matrix(small));
    auto expected = oracle::minor_gcd_invariants(small);
    ASSERT_EQ(f.invariant_factors.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      EXPECT_EQ(f.invariant_factors[i], Integer(static_cast<long>(expected[i])));
  }
}

TEST(Snf, LargeEntriesDoNotOverflow) {
  // Entries near 2^62; products during elimination exceed 64 bits.
  const long big = 4611686018427387903L;
  IntMatrix a{{big, big - 1}, {big - 2, big - 5}};
  auto f = snf(a);
  EXPECT_EQ(f.U * a * f.V, f.S);
  Integer d = determinant(a);
  EXPECT_EQ(Integer(f.invariant_factors[0] * f.invariant_factors[1]), Integer(abs(d)));
}

TEST(Determinant, MatchesLaplace) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto small = oracle::random_small_matrix(rng, 4, 4, -9, 9);
    EXPECT_EQ(determinant(to_int_matrix(small)), Integer(static_cast<long>(oracle::det_laplace(small))));
  }
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
}

TEST(LatticeMember, Examples) {
  IntMatrix even{{2, 0}, {0, 2}};
  EXPECT_TRUE(lattice_member(even, IntVector{4, 6}));
  EXPECT_FALSE(lattice_member(even, IntVector{1, 0}));
  EXPECT_TRUE(lattice_member(IntMatrix(0, 2), IntVector{0, 0}));
  EXPECT_FALSE(lattice_member(IntMatrix(0, 2), IntVector{0, 1}));
  EXPECT_THROW(lattice_member(even, IntVector{1, 2, 3}), DimensionMismatch);
}

TEST(LatticeMember, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> coef(-3, 3);
  int witnessed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto basis = oracle::random_small_matrix(rng, 3, 3, -4, 4);
    // Half the targets are built as combinations, half are random.
    std::vector<std::int64_t> v(3);
    if (trial % 2 == 0) {
      std::int64_t c0 = coef(rng), c1 = coef(rng), c2 = coef(rng);
      for (std::size_t j = 0; j < 3; ++j) v[j] = c0 * basis[0][j] + c1 * basis[1][j] + c2 * basis[2][j];
    } else {
      for (auto& x : v) x = coef(rng) * 3;
    }
    IntVector iv(v.begin(), v.end());
    const bool member = lattice_member(to_int_matrix(basis), iv);
    if (oracle::exhaustive_lattice_search(basis, v, 10)) {
      ++witnessed;
      EXPECT_TRUE(member);
    }
    if (!member) EXPECT_FALSE(oracle::exhaustive_lattice_search(basis, v, 10));
  }
  EXPECT_GT(witnessed, 90);
}

TEST(ReduceModulo, CongruentVectorsShareARepresentative) {
  IntMatrix h = canonical_basis(IntMatrix{{2, 4}, {6, 8}});
  auto a = reduce_modulo(h, IntVector{5, 7});
  auto b = reduce_modulo(h, IntVector{5 + 2 * 3 - 6, 7 + 4 * 3 - 8});
  EXPECT_EQ(a, b);
}

TEST(UnimodularInverse, InvertsAndRejects) {
  IntMatrix u{{2, 1}, {1, 1}};
  auto inv = unimodular_inverse(u);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(u * *inv, IntMatrix::identity(2));
  EXPECT_FALSE(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}).has_value());
}

}  // namespace
}  // namespace grk
