#pragma once

// Lattice points of L ∩ Z_{>=0}^n and of cosets (x0 + L) ∩ Z_{>=0}^n.
//
// Hilbert bases come from a pulling triangulation of the cone followed by
// enumeration of the half-open parallelotopes of every simplicial piece;
// the degree-bounded enumerators below are the brute-force counterparts.

#include <cstdint>
#include <type_traits>
#include <vector>

#include "equidim/lattice.hpp"

namespace equidim {

using Point = std::vector<std::int64_t>;

struct ResourceCaps {
  int max_degree = 24;
  std::uint64_t max_candidates = 1'000'000;
};

Point to_point(const IntVector& v);
static_assert(std::is_same_v<Point, std::vector<long>>, "Point shares to_integers with lattice.hpp");
std::int64_t degree(const Point& p);
// Total degree first, then lexicographic.
bool graded_less(const Point& a, const Point& b);
// a >= b componentwise
bool dominates(const Point& a, const Point& b);
void sort_graded(std::vector<Point>& pts);

// Extreme rays of the cone {x >= 0} ∩ span(L), each the smallest multiple of
// the primitive ray vector lying in L. Sorted graded-lex.
std::vector<Point> extreme_rays(const Sublattice& lattice, const ResourceCaps& caps);

// Hilbert basis of L ∩ Z_{>=0}^n, sorted graded-lex.
std::vector<Point> orthant_hilbert_basis(const Sublattice& lattice, const ResourceCaps& caps);

// Minimal elements (module generators over L ∩ Z_{>=0}^n) of
// (offset + L) ∩ Z_{>=0}^n, sorted graded-lex. Empty when the coset misses the orthant.
std::vector<Point> orthant_coset_minima(const IntVector& offset, const Sublattice& lattice,
                                        const ResourceCaps& caps);

// Membership in offset + L with 64-bit arithmetic.
class CosetTest {
 public:
  CosetTest(const IntVector& offset, const Sublattice& lattice);
  bool operator()(const Point& x) const;

 private:
  std::size_t rank_ = 0;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> target_;
};

// Every point of (offset + L) ∩ Z_{>=0}^n of total degree <= max_degree,
// by exhaustive loop over the degree slices. Graded-lex order.
std::vector<Point> enumerate_orthant_coset(const IntVector& offset, const Sublattice& lattice,
                                           int max_degree, const ResourceCaps& caps);

// Calls f on every x in Z_{>=0}^n with |x| <= max_degree, graded-lex order.
template <class F>
void for_each_graded(std::size_t n, int max_degree, F&& f) {
  Point x(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == n) {
      x[i] = left;
      f(x);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      x[i] = v;
      self(self, i + 1, left - v);
    }
  };
  for (int d = 0; d <= max_degree; ++d) {
    if (n == 0) {
      if (d == 0) f(x);
      continue;
    }
    rec(rec, 0, d);
  }
}

// Number of points in Z_{>=0}^n with degree <= d, saturating at UINT64_MAX.
std::uint64_t graded_count(std::size_t n, int d);

}  // namespace equidim
