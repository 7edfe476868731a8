#pragma once

// Closed subgroups of the diagonalizable group G, handled only through their
// character annihilators B_H = {chi : chi(H) = 1} ⊆ A.

#include <optional>
#include <vector>

#include "equidim/divisors.hpp"

namespace equidim {

class SubgroupOfG {
 public:
  SubgroupOfG() = default;
  explicit SubgroupOfG(CharacterSubgroup annihilator) : b_(std::move(annihilator)) {}

  static SubgroupOfG whole(const CharacterGroup& g) { return SubgroupOfG(CharacterSubgroup::zero(g)); }
  static SubgroupOfG trivial(const CharacterGroup& g) { return SubgroupOfG(CharacterSubgroup::whole(g)); }

  const CharacterSubgroup& annihilator() const { return b_; }
  // other ⊆ this
  bool contains(const SubgroupOfG& other) const { return other.b_.contains(b_); }
  bool is_trivial() const { return b_ == CharacterSubgroup::whole(b_.group()); }

  friend bool operator==(const SubgroupOfG& a, const SubgroupOfG& b) { return a.b_ == b.b_; }

 private:
  CharacterSubgroup b_;
};

SubgroupOfG perp(const CharacterSubgroup& b);
CharacterSubgroup perp(const SubgroupOfG& h);
// H1 · H2
SubgroupOfG join(const SubgroupOfG& a, const SubgroupOfG& b);
// H1 ∩ H2
SubgroupOfG meet(const SubgroupOfG& a, const SubgroupOfG& b);

struct FiniteAbelianData {
  std::vector<Integer> invariant_factors;
  Integer order = 1;
  Integer exponent = 1;

  bool is_trivial() const { return order == 1; }
};

// nullopt when one of the factors is free.
std::optional<FiniteAbelianData> finite_data(const std::vector<Integer>& invariant_factors);

SubgroupOfG ineffective_kernel(const AffineSemigroup& s, const WeightedAction& action);
SubgroupOfG inertia_subgroup(const AffineSemigroup& s, const WeightedAction& action, const FacetPrime& p);
// Join of the inertia groups of the ht1 facets (all of them, or only the
// non-principal ones) together with the ineffective kernel.
SubgroupOfG pseudo_reflection_group(const ActionModel& m, bool non_principal_only);
SubgroupOfG tor_subgroup(const Integer& m, const SubgroupOfG& h);
// H / (H ∩ L), computed as B_L / (B_L ∩ B_H); nullopt when infinite.
std::optional<FiniteAbelianData> restriction_data(const SubgroupOfG& h, const SubgroupOfG& l);

struct DerivedSubgroups {
  SubgroupOfG stabilizer;  // 𝒦 = (unit-weight group)^⊥
  SubgroupOfG delta;       // Λ^⊥
  SubgroupOfG omega;       // (cocycle lattice)^⊥
};

DerivedSubgroups derived_subgroups(const CharacterSubgroup& unit_weights, const CharacterSubgroup& qualified,
                                   const CharacterSubgroup& cocycles);

// S' = {a in S : wt(a) in B_H}, the semigroup of X//H.
AffineSemigroup quotient_action(const AffineSemigroup& s, const WeightedAction& action, const SubgroupOfG& h,
                                const ResourceCaps& caps = {});

}  // namespace equidim
