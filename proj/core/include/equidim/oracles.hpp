#pragma once

// Brute-force ground truth, independent of the divisor calculus.

#include <optional>
#include <vector>

#include "equidim/divisors.hpp"

namespace equidim {

enum class TriState { yes, no, inconclusive };
const char* to_string(TriState t);

// Faces of cone(S), each given by the coordinates vanishing on it.
struct FaceLatticeSlice {
  std::vector<std::vector<std::size_t>> zero_sets;
  std::vector<std::size_t> ranks;
};

// Exhaustive over coordinate subsets; ResourceCapError beyond 20 coordinates.
FaceLatticeSlice face_lattice(const AffineSemigroup& s);

struct NullFiberResult {
  std::size_t dimension = 0;        // max rank of a face F with F ∩ S_G = {0}
  std::size_t expected = 0;         // rank S_X - rank S_G
  std::vector<std::size_t> witness;  // zero set of a face attaining the maximum
  bool equidimensional() const { return dimension == expected; }
};

NullFiberResult null_fiber_dimension(const AffineSemigroup& s_x, const AffineSemigroup& s_g);

struct BoundedFreeness {
  TriState verdict = TriState::inconclusive;
  std::optional<Point> generator;       // minimal-degree fiber element
  std::optional<Point> counterexample;  // fiber element not in generator + S_G
};

// Compares the fiber of chi with generator + S_G up to degree d.
BoundedFreeness bounded_freeness_oracle(const AffineSemigroup& s_x, const WeightedAction& action,
                                        const Character& chi, int d, const ResourceCaps& caps = {});

// Smallest m <= bound with m * D a principal divisor; nullopt beyond the bound.
Order brute_force_class_order(const ClassGroupData& cl, const IntVector& d, long bound);

struct BoundedCofreeness {
  TriState verdict = TriState::inconclusive;  // no = two module generators share a weight
  int degree_cap = 0;
  std::size_t module_basis_size = 0;          // monomials outside S_G^+ + S up to the cap
  std::optional<Character> witness_character;
  std::vector<Point> witness;                  // the colliding generators
  std::vector<Character> colliding_characters;  // all weights with a collision, sorted
};

// Enumerates the monomial basis candidates M (points of S not divisible by a
// nonzero invariant) up to degree d. yes = no collision up to d.
BoundedCofreeness bounded_cofreeness_oracle(const AffineSemigroup& s_x, const AffineSemigroup& s_g,
                                            const WeightedAction& action, int d, const ResourceCaps& caps = {});

}  // namespace equidim
