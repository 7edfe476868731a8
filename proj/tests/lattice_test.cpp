#include <gtest/gtest.h>

#include <random>

#include "equidim/errors.hpp"
#include "equidim/lattice.hpp"
#include "support.hpp"

using namespace equidim;
using equidim::testing::ints;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

Sublattice random_lattice(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(0, static_cast<int>(n) + 1);
  std::uniform_int_distribution<long> d(-4, 4);
  std::vector<IntVector> gens(static_cast<std::size_t>(count(rng)), IntVector(n));
  for (auto& g : gens)
    for (auto& x : g) x = d(rng);
  return Sublattice(n, gens);
}

void expect_smith(const IntMatrix& m) {
  SmithForm f = smith_normal_form(m);
  EXPECT_EQ(f.left * m * f.right, f.diagonal);
  EXPECT_EQ(abs(determinant(f.left)), 1);
  EXPECT_EQ(abs(determinant(f.right)), 1);
  for (std::size_t i = 0; i < f.diagonal.rows(); ++i)
    for (std::size_t j = 0; j < f.diagonal.cols(); ++j)
      if (i != j) EXPECT_EQ(f.diagonal(i, j), 0);
  for (std::size_t i = 0; i < f.rank; ++i) EXPECT_GT(f.diagonal(i, i), 0);
  for (std::size_t i = 0; i + 1 < f.rank; ++i) EXPECT_EQ(f.diagonal(i + 1, i + 1) % f.diagonal(i, i), 0);
  for (std::size_t i = f.rank; i < std::min(m.rows(), m.cols()); ++i) EXPECT_EQ(f.diagonal(i, i), 0);
}

}  // namespace

TEST(SmithForm, DiagonalTwoThree) {
  SmithForm f = smith_normal_form(IntMatrix::from_ints({{2, 0}, {0, 3}}));
  EXPECT_EQ(f.diagonal, IntMatrix::from_ints({{1, 0}, {0, 6}}));
}

TEST(SmithForm, SingleRow) {
  SmithForm f = smith_normal_form(IntMatrix::from_ints({{1, 1, 1, -3}}));
  EXPECT_EQ(f.diagonal, IntMatrix::from_ints({{1, 0, 0, 0}}));
  EXPECT_EQ(f.rank, 1u);
}

TEST(SmithForm, EmptyShapes) {
  expect_smith(IntMatrix(0, 3));
  expect_smith(IntMatrix(3, 0));
  expect_smith(IntMatrix(2, 2));
}

TEST(SmithForm, RandomReconstruction) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) expect_smith(random_matrix(rng, 4, 4, -5, 5));
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    expect_smith(random_matrix(rng, dim(rng), dim(rng), -9, 9));
  }
}

TEST(Diophantine, Examples) {
  auto s = solve_diophantine(IntMatrix::from_ints({{2}}), ints({4}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, ints({2}));
  EXPECT_EQ(s->kernel.rank(), 0u);
  EXPECT_FALSE(solve_diophantine(IntMatrix::from_ints({{2}}), ints({3})));

  IntMatrix m = IntMatrix::from_ints({{1, 1, 1, -3}});
  auto k = solve_diophantine(m, ints({0}));
  ASSERT_TRUE(k);
  EXPECT_EQ(k->kernel.rank(), 3u);
  EXPECT_TRUE(k->kernel.contains(ints({1, -1, 0, 0})));
  for (const auto& b : k->kernel.basis()) EXPECT_EQ(m * b, ints({0}));
}

TEST(Diophantine, RandomSystemsAgreeWithSubstitution) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 4, -4, 4);
    IntVector x = m.column(0);  // b = m * e_1 is always solvable
    IntVector e(4);
    e[0] = 1;
    auto s = solve_diophantine(m, m * e);
    ASSERT_TRUE(s);
    EXPECT_EQ(m * s->particular, m * e);
    for (const auto& b : s->kernel.basis()) EXPECT_TRUE(is_zero(m * b));
    (void)x;
  }
}

TEST(ClassOrder, Examples) {
  // {m in Z^3 : m1 + m2 + m3 = 0 mod 3}
  Sublattice l = preimage(IntMatrix::from_ints({{1, 1, 1}}), Sublattice(1, {ints({3})}));
  EXPECT_EQ(class_order(ints({1, 0, 0}), l), Integer(3));
  EXPECT_EQ(class_order(ints({1, -1, 0}), l), Integer(1));
  Sublattice line(2, {ints({0, 1})});
  EXPECT_FALSE(class_order(ints({1, 0}), line).has_value());
}

TEST(ClassOrder, MinimalMultipleByMembership) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Sublattice l = random_lattice(rng, 3);
    IntVector v = ints({d(rng), d(rng), d(rng)});
    Order o = class_order(v, l);
    if (!o) {
      for (long k = 1; k <= 50; ++k) EXPECT_FALSE(l.contains(Integer(k) * v));
      continue;
    }
    ASSERT_LE(*o, 1000);
    EXPECT_TRUE(l.contains(*o * v));
    for (long k = 1; k < o->get_si(); ++k) EXPECT_FALSE(l.contains(Integer(k) * v));
  }
}

TEST(SublatticeAlgebra, Examples) {
  Sublattice two(1, {ints({2})}), three(1, {ints({3})});
  EXPECT_EQ(sum(two, three), Sublattice::full(1));
  EXPECT_EQ(intersect(two, three), Sublattice(1, {ints({6})}));
  EXPECT_EQ(scale(2, two), Sublattice(1, {ints({4})}));
  EXPECT_TRUE(two.contains(ints({8})));
  EXPECT_FALSE(two.contains(ints({5})));
  EXPECT_THROW(sum(two, Sublattice::full(2)), InputError);
}

TEST(SublatticeAlgebra, Saturation) {
  Sublattice l(3, {ints({2, 2, 0}), ints({0, 3, 3})});
  Sublattice s = saturate(l);
  EXPECT_TRUE(s.contains(ints({1, 1, 0})));
  EXPECT_TRUE(s.contains(ints({0, 1, 1})));
  EXPECT_EQ(s.rank(), 2u);
  EXPECT_FALSE(l.is_saturated());
  EXPECT_TRUE(s.is_saturated());
}

TEST(SublatticeAlgebra, CanonicalFormIsRepresentationIndependent) {
  Sublattice a(3, {ints({1, 2, 3}), ints({0, 1, 1})});
  Sublattice b(3, {ints({1, 3, 4}), ints({1, 1, 2}), ints({2, 5, 7})});
  EXPECT_EQ(a, b);
}

TEST(SublatticeAlgebra, RandomTriplesCommuteAndAssociate) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Sublattice a = random_lattice(rng, 4), b = random_lattice(rng, 4), c = random_lattice(rng, 4);
    EXPECT_EQ(sum(a, b), sum(b, a));
    EXPECT_EQ(intersect(a, b), intersect(b, a));
    EXPECT_EQ(sum(sum(a, b), c), sum(a, sum(b, c)));
    EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
    Sublattice i = intersect(a, b);
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    EXPECT_TRUE(sum(a, b).contains(a));
  }
}

TEST(SublatticeAlgebra, IntersectionMatchesBoxEnumeration) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Sublattice a = random_lattice(rng, 2), b = random_lattice(rng, 2);
    Sublattice i = intersect(a, b);
    for (long x = -8; x <= 8; ++x)
      for (long y = -8; y <= 8; ++y) {
        IntVector v = ints({x, y});
        EXPECT_EQ(i.contains(v), a.contains(v) && b.contains(v));
      }
  }
}

TEST(FgAbGroup, InvariantFactors) {
  FgAbGroup g(3, IntMatrix::from_ints({{2, 0}, {0, 4}, {0, 0}}));
  EXPECT_EQ(g.invariant_factors(), (std::vector<Integer>{2, 4, 0}));
  EXPECT_FALSE(g.order().has_value());
  FgAbGroup h(2, IntMatrix::from_ints({{2, 0}, {0, 3}}));
  EXPECT_EQ(h.invariant_factors(), (std::vector<Integer>{6}));
  EXPECT_EQ(h.exponent(), Integer(6));
  EXPECT_EQ(h.order_of(ints({1, 0})), Integer(2));
  EXPECT_EQ(h.order_of(ints({1, 1})), Integer(6));
  EXPECT_TRUE(h.is_zero(ints({2, 3})));
  EXPECT_EQ(h.subgroup_invariants({ints({1, 0})}), (std::vector<Integer>{2}));
}

TEST(FgAbGroup, QuotientInvariants) {
  Sublattice big = Sublattice::full(2);
  Sublattice small(2, {ints({3, 0}), ints({0, 3})});
  EXPECT_EQ(quotient_invariants(big, small), (std::vector<Integer>{3, 3}));
  EXPECT_EQ(quotient_invariants(big, big), std::vector<Integer>{});
}
