#include <gtest/gtest.h>

#include <map>
#include <random>

#include "equidim/errors.hpp"
#include "equidim/semigroup.hpp"
#include "support.hpp"

using namespace equidim;
using namespace equidim::testing;

namespace {

// Hilbert basis of the paired system {(a,b) in S x S : wt(a) + wt(b) = 0},
// projected to the weights of the a-parts.
CharacterSubgroup paired_unit_group(const AffineSemigroup& s, const WeightedAction& action) {
  const std::size_t n = s.ambient_dim();
  const auto& g = action.group;
  // lattice of (a, b) in L x L with W a + W b in T
  std::vector<IntVector> gens;
  for (const auto& v : s.defining_lattice().basis()) {
    IntVector a = v, b(n);
    a.insert(a.end(), b.begin(), b.end());
    gens.push_back(a);
    IntVector c(n);
    c.insert(c.end(), v.begin(), v.end());
    gens.push_back(c);
  }
  Sublattice pair_lattice(2 * n, gens);
  IntMatrix w2(g.dimension(), 2 * n);
  IntMatrix w = action.weight_matrix();
  for (std::size_t i = 0; i < g.dimension(); ++i)
    for (std::size_t j = 0; j < n; ++j) w2(i, j) = w2(i, n + j) = w(i, j);
  Sublattice l = intersect(pair_lattice, preimage(w2, g.relations()));
  std::vector<Character> chis;
  for (const auto& h : orthant_hilbert_basis(l, {})) {
    Point a(h.begin(), h.begin() + static_cast<long>(n));
    chis.push_back(weight_of(action, a));
  }
  return CharacterSubgroup(g, chis);
}

}  // namespace

TEST(BuildSemigroup, PolynomialRingHasCoordinateFacets) {
  auto a = make_action(1, {}, {{1}, {1}, {1}, {1}});
  AffineSemigroup s = build_semigroup(a);
  EXPECT_EQ(s.rank(), 4u);
  ASSERT_EQ(s.facets().size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(s.facets()[i].coordinate, i);
    EXPECT_EQ(s.facets()[i].scale, 1);
  }
  EXPECT_EQ(s.hilbert_basis().size(), 4u);
}

TEST(BuildSemigroup, Example58HasThreeFacets) {
  AffineSemigroup s = build_semigroup(example_5_8());
  EXPECT_EQ(s.rank(), 3u);
  ASSERT_EQ(s.facets().size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(s.facets()[i].coordinate, i);
  EXPECT_EQ(s.hilbert_basis().size(), 10u);
  for (const auto& h : s.hilbert_basis()) EXPECT_EQ(h[3], 1);
}

TEST(BuildSemigroup, Example57IndexThreeFourFacets) {
  AffineSemigroup s = build_semigroup(example_5_7());
  EXPECT_EQ(s.group().index_in_ambient(), Integer(3));
  ASSERT_EQ(s.facets().size(), 4u);
  // each coordinate functional takes the value 1 somewhere on ZS
  for (const auto& p : s.facets()) {
    EXPECT_EQ(p.scale, 1);
    bool hit = false;
    for (long x = -3; x <= 3 && !hit; ++x)
      for (long y = -3; y <= 3 && !hit; ++y)
        for (long z = -3; z <= 3 && !hit; ++z)
          for (long w = -3; w <= 3 && !hit; ++w) {
            IntVector v = ints({x, y, z, w});
            if (s.group().contains(v) && p.value(v) == 1) hit = true;
          }
    EXPECT_TRUE(hit);
  }
}

TEST(HilbertBasis, Examples) {
  EXPECT_EQ(hilbert_basis(IntMatrix::from_ints({{1, -1}}), {}), (std::vector<Point>{{1, 1}}));
  auto hb = hilbert_basis(IntMatrix::from_ints({{1, 1, 1, -3}}), {});
  EXPECT_EQ(hb.size(), 10u);
  for (const auto& h : hb) EXPECT_EQ(h[3], 1);
  auto inv = hilbert_basis(IntMatrix::from_ints({{1, -1, 0, 0}, {2, 0, 1, -3}}), {});
  EXPECT_EQ(inv, (std::vector<Point>{{0, 0, 3, 1}, {1, 1, 1, 1}, {3, 3, 0, 2}}));
}

TEST(HilbertBasis, MatchesBruteForceOnExamples) {
  Sublattice l1 = defining_lattice(make_action(0, {}, {{}, {}, {}, {}}, {{{1, 1, 1, -3}, 0}}));
  EXPECT_EQ(orthant_hilbert_basis(l1, {}), brute_hilbert_basis(l1, 8));
  Sublattice l2 = preimage(IntMatrix::from_ints({{1, -1, 0, 0}, {2, 0, 1, -3}}), Sublattice(2));
  EXPECT_EQ(orthant_hilbert_basis(l2, {}), brute_hilbert_basis(l2, 12));
}

TEST(HilbertBasis, RandomLatticesAgreeWithBruteForce) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    WeightedAction a = random_action(rng, 4);
    AffineSemigroup s = build_semigroup(a);
    AffineSemigroup sg = invariant_semigroup(s, a);
    for (const AffineSemigroup* t : {&s, &sg}) {
      const auto& hb = t->hilbert_basis();
      std::int64_t maxdeg = 0;
      for (const auto& h : hb) maxdeg = std::max(maxdeg, degree(h));
      if (maxdeg > 14) continue;
      // generators found by brute force up to twice the maximal degree
      int d = static_cast<int>(std::min<std::int64_t>(2 * maxdeg + 1, 16));
      auto brute = brute_hilbert_basis(t->defining_lattice(), d);
      EXPECT_EQ(hb, brute) << "trial " << trial;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(HilbertBasis, ElementsAreIrreducibleAndGenerate) {
  for (const auto& a : fixtures()) {
    AffineSemigroup s = build_semigroup(a);
    const auto& hb = s.hilbert_basis();
    for (const auto& x : hb)
      for (const auto& y : hb)
        if (x != y) EXPECT_FALSE(dominates(x, y));
    // saturation: every lattice point in the orthant of degree <= 10 is a sum of generators
    auto pts = enumerate_orthant_coset(IntVector(s.ambient_dim()), s.defining_lattice(), 10, {});
    std::set<Point> reachable{Point(s.ambient_dim(), 0)};
    for (const auto& p : pts) {
      if (degree(p) == 0) continue;
      bool ok = false;
      for (const auto& h : hb) {
        if (!dominates(p, h)) continue;
        Point q = p;
        for (std::size_t i = 0; i < q.size(); ++i) q[i] -= h[i];
        if (reachable.count(q)) { ok = true; break; }
      }
      EXPECT_TRUE(ok);
      if (ok) reachable.insert(p);
    }
  }
}

TEST(Facets, NormalsNonnegativeAndCodimensionOne) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedAction a = random_action(rng);
    for (const auto& s : {build_semigroup(a), invariant_semigroup(build_semigroup(a), a)}) {
      for (const auto& p : s.facets()) {
        EXPECT_FALSE(p.face_generators.empty() && s.rank() > 1);
        std::vector<IntVector> zs;
        for (const auto& h : s.hilbert_basis()) {
          EXPECT_GE(p.value(h), 0);
          if (p.value(h) == 0) zs.push_back(to_integers(h));
        }
        EXPECT_EQ(rank_of(zs, s.ambient_dim()) + 1, s.rank());
        // primitive on ZS
        Integer g = 0;
        for (const auto& b : s.group().basis()) g = gcd(g, p.value(b));
        EXPECT_EQ(g, 1);
      }
    }
  }
}

TEST(Weights, WeightOf) {
  auto a = example_5_8();
  EXPECT_EQ(weight_of(a, Point{0, 0, 0, 0}), ints({0, 0}));
  EXPECT_EQ(weight_of(a, Point{1, 0, 2, 1}), ints({0, 1}));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> d(0, 5);
  for (int i = 0; i < 50; ++i) {
    auto b = random_action(rng);
    Point x(b.ambient_dim), y(b.ambient_dim), z(b.ambient_dim);
    for (std::size_t k = 0; k < x.size(); ++k) {
      x[k] = d(rng);
      y[k] = d(rng);
      z[k] = x[k] + y[k];
    }
    EXPECT_EQ(weight_of(b, z), b.group.reduce(weight_of(b, x) + weight_of(b, y)));
  }
}

TEST(Fibers, SampleAndGenerators) {
  auto a = example_5_8();
  AffineSemigroup s = build_semigroup(a);
  auto zero = fiber_sample(s, a, ints({0, 0}));
  ASSERT_TRUE(zero);
  EXPECT_EQ(*zero, Point(4, 0));
  auto f = fiber_sample(s, a, ints({0, 1}));
  ASSERT_TRUE(f);
  EXPECT_EQ(weight_of(a, *f), ints({0, 1}));
  EXPECT_TRUE(s.contains(*f));
  // first coordinate of the weight is always 0 on S_X
  EXPECT_FALSE(fiber_sample(s, a, ints({1, 0})));
}

TEST(Fibers, GeneratorsAreMinimalFiberElements) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto a = random_action(rng, 4);
    AffineSemigroup s = build_semigroup(a);
    std::vector<Character> chis;
    for (const auto& h : s.hilbert_basis()) chis.push_back(weight_of(a, h));
    for (const auto& chi : chis) {
      auto gens = fiber_generators(s, a, chi);
      std::int64_t top = 0;
      for (const auto& g : gens) top = std::max(top, degree(g));
      if (top > 8) continue;
      auto all = enumerate_fiber(s, a, chi, 12);
      std::vector<Point> minimal;
      for (const auto& x : all)
        if (std::none_of(minimal.begin(), minimal.end(), [&](const Point& m) {
              if (!dominates(x, m)) return false;
              Point d = x;
              for (std::size_t i = 0; i < d.size(); ++i) d[i] -= m[i];
              return is_zero(weight_of(a, d));
            }))
          minimal.push_back(x);
      EXPECT_EQ(gens, minimal);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Fibers, AvoidsPrime) {
  auto a = make_action(2, {}, {{1, 0}, {0, 1}});
  AffineSemigroup s = build_semigroup(a);
  EXPECT_TRUE(fiber_avoids_prime(s, a, ints({0, 0}), s.facets()[0]));
  EXPECT_FALSE(fiber_avoids_prime(s, a, ints({1, 0}), s.facets()[0]));
  EXPECT_TRUE(fiber_avoids_prime(s, a, ints({1, 0}), s.facets()[1]));
}

TEST(Fibers, AvoidsPrimeAgreesWithEnumeration) {
  for (const auto& a : fixtures()) {
    AffineSemigroup s = build_semigroup(a);
    std::set<Character> chis;
    for (const auto& x : enumerate_orthant_coset(IntVector(s.ambient_dim()), s.defining_lattice(), 4, {}))
      chis.insert(weight_of(a, x));
    for (const auto& chi : chis) {
      auto all = enumerate_fiber(s, a, chi, 12);
      for (const auto& p : s.facets()) {
        bool brute = std::any_of(all.begin(), all.end(), [&](const Point& x) { return p.value(x) == 0; });
        EXPECT_EQ(fiber_avoids_prime(s, a, chi, p), brute);
      }
    }
  }
}

TEST(Fibers, EnumerateExamples) {
  auto a = example_5_8();
  AffineSemigroup s = build_semigroup(a);
  EXPECT_EQ(enumerate_fiber(s, a, ints({0, 0}), 0), (std::vector<Point>{Point(4, 0)}));
  auto inv = enumerate_fiber(s, a, ints({0, 0}), 4);
  EXPECT_NE(std::find(inv.begin(), inv.end(), Point{1, 1, 1, 1}), inv.end());
  EXPECT_NE(std::find(inv.begin(), inv.end(), Point{0, 0, 3, 1}), inv.end());
  for (const auto& x : inv) EXPECT_TRUE(is_zero(weight_of(a, x)));
}

TEST(Fibers, EnumerationCountsMatchNestedLoops) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_action(rng, 3);
    AffineSemigroup s = build_semigroup(a);
    std::map<Character, std::size_t> counts;
    const long d = 6;
    std::size_t n = a.ambient_dim;
    Point x(3, 0);
    for (x[0] = 0; x[0] <= d; ++x[0])
      for (x[1] = 0; x[1] <= (n > 1 ? d : 0); ++x[1])
        for (x[2] = 0; x[2] <= (n > 2 ? d : 0); ++x[2]) {
          Point y(x.begin(), x.begin() + static_cast<long>(n));
          if (degree(y) > d || !s.contains(y)) continue;
          ++counts[weight_of(a, y)];
        }
    for (const auto& [chi, c] : counts) EXPECT_EQ(enumerate_fiber(s, a, chi, d).size(), c);
  }
}

TEST(UnitWeights, Examples) {
  auto triv = trivial_group();
  EXPECT_EQ(weight_unit_group(build_semigroup(triv), triv), CharacterSubgroup::whole(triv.group));
  auto a = example_5_8();
  auto s = build_semigroup(a);
  auto u = weight_unit_group(s, a);
  EXPECT_TRUE(u.contains(ints({0, 1})));
  EXPECT_TRUE(fiber_sample(s, a, ints({0, 1})));
  EXPECT_TRUE(fiber_sample(s, a, ints({0, -1})));
  auto pos = make_action(1, {}, {{1}, {2}, {3}});
  EXPECT_EQ(weight_unit_group(build_semigroup(pos), pos), CharacterSubgroup::zero(pos.group));
}

TEST(UnitWeights, FaceMethodMatchesPairedSystem) {
  for (const auto& a : fixtures()) {
    auto s = build_semigroup(a);
    EXPECT_EQ(weight_unit_group(s, a), paired_unit_group(s, a));
  }
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_action(rng, 3);
    auto s = build_semigroup(a);
    EXPECT_EQ(weight_unit_group(s, a), paired_unit_group(s, a)) << "trial " << trial;
  }
}

TEST(Caps, CandidateCapThrows) {
  auto a = make_action(1, {}, {{7}, {-11}, {13}, {-5}});
  AffineSemigroup s = build_semigroup(a);
  ResourceCaps tiny;
  tiny.max_candidates = 3;
  EXPECT_THROW(invariant_semigroup(s, a, tiny), ResourceCapError);
  EXPECT_THROW(enumerate_fiber(s, a, ints({0}), 30, tiny), ResourceCapError);
}
