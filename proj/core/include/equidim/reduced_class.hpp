#pragma once

#include <string>
#include <vector>

#include "equidim/subgroups.hpp"

namespace equidim {

// Characters chi with chi, -chi realized, chi trivial on the pseudo-reflection
// group, and both fibers meeting every facet that blows up.
struct QualifiedLattice {
  CharacterSubgroup lattice;
  std::string provenance;  // "exact-pde" or "exact-faces"

  std::vector<Character> basis() const { return lattice.generators(); }
};

QualifiedLattice qualified_lattice(const ActionModel& m, const SubgroupOfG& reflections);

// Reduced characters sum n_i b_i with |n_i| <= bound, deduplicated, each paired
// with the smallest bound that reaches it. Sorted by (level, character).
struct SweepCharacter {
  Character chi;
  int level = 0;
};
std::vector<SweepCharacter> box_sweep(const CharacterGroup& g, const std::vector<Character>& basis, int bound);

struct SweepEntry {
  Character chi;
  int level = 0;
  IntVector divisor_class;  // [D(chi)] in Cl(R)
  IntVector module_class;   // [R_chi] in Cl(R^G)
  Order divisor_order;
  Order module_order;
};

struct ReducedClassData {
  std::vector<Integer> urcl;     // invariant factors, 0 = free
  std::vector<Integer> cltilde;
  Order urcl_exponent;
  Order cltilde_exponent;
  int sweep_bound = 2;
  bool stable = true;            // nothing new at sweep_bound + 1
  std::vector<SweepEntry> entries;  // up to sweep_bound + 1

  // exp C~l; UrCl may have finite exponent while C~l has none.
  Order t() const { return cltilde_exponent; }
};

// Throws InvariantViolation when ord[D(chi)] != ord[R_chi] for a swept chi
// with [R_chi] torsion, or when C~l is torsion and the exponents differ.
ReducedClassData reduced_class_groups(const ActionModel& m, const QualifiedLattice& q, int sweep_bound = 2,
                                      std::size_t workers = 0);

// t * chi is free for every chi of the wider sweep.
bool t_consistency_check(const ActionModel& m, const QualifiedLattice& q, const Integer& t, int wide_bound = 3,
                         std::size_t workers = 0);

}  // namespace equidim
