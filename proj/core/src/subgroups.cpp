#include "equidim/subgroups.hpp"

#include <algorithm>

#include "equidim/errors.hpp"

namespace equidim {

SubgroupOfG perp(const CharacterSubgroup& b) { return SubgroupOfG(b); }
CharacterSubgroup perp(const SubgroupOfG& h) { return h.annihilator(); }

SubgroupOfG join(const SubgroupOfG& a, const SubgroupOfG& b) {
  return SubgroupOfG(intersect(a.annihilator(), b.annihilator()));
}

SubgroupOfG meet(const SubgroupOfG& a, const SubgroupOfG& b) {
  return SubgroupOfG(sum(a.annihilator(), b.annihilator()));
}

std::optional<FiniteAbelianData> finite_data(const std::vector<Integer>& factors) {
  FiniteAbelianData d;
  for (const auto& f : factors) {
    if (f == 0) return std::nullopt;
    d.invariant_factors.push_back(f);
    d.order *= f;
    d.exponent = lcm(d.exponent, f);
  }
  return d;
}

SubgroupOfG ineffective_kernel(const AffineSemigroup& s, const WeightedAction& action) {
  std::vector<Character> gens;
  for (const auto& h : s.hilbert_basis()) gens.push_back(weight_of(action, h));
  return SubgroupOfG(CharacterSubgroup(action.group, std::move(gens)));
}

SubgroupOfG inertia_subgroup(const AffineSemigroup&, const WeightedAction& action, const FacetPrime& p) {
  std::vector<Character> gens;
  for (const auto& h : p.face_generators) gens.push_back(weight_of(action, h));
  return SubgroupOfG(CharacterSubgroup(action.group, std::move(gens)));
}

SubgroupOfG pseudo_reflection_group(const ActionModel& m, bool non_principal_only) {
  const auto& s = m.ring();
  SubgroupOfG r = ineffective_kernel(s, m.action());
  for (std::size_t p : m.classification().of_tier(FacetTier::ht1)) {
    // Non-principal: the class of P in Cl(R) and the class of its contraction
    // in Cl(R^G) are both nonzero. A principal contraction never obstructs:
    // with dim X//G = 1 the invariant ring is a PID and every R_chi is free.
    if (non_principal_only) {
      const auto& cls = m.classification();
      if (m.cl_ring().is_principal(m.cl_ring().prime_divisor(p))) continue;
      if (m.cl_invariants().is_principal(m.cl_invariants().prime_divisor(cls.facets[p].q))) continue;
    }
    r = join(r, inertia_subgroup(s, m.action(), s.facets()[p]));
  }
  return r;
}

SubgroupOfG tor_subgroup(const Integer& m, const SubgroupOfG& h) {
  if (m < 1) throw InputError("tor_subgroup needs m >= 1");
  return SubgroupOfG(scale(m, h.annihilator()));
}

std::optional<FiniteAbelianData> restriction_data(const SubgroupOfG& h, const SubgroupOfG& l) {
  const auto& bl = l.annihilator();
  return finite_data(quotient_invariants(bl, intersect(bl, h.annihilator())));
}

DerivedSubgroups derived_subgroups(const CharacterSubgroup& unit_weights, const CharacterSubgroup& qualified,
                                   const CharacterSubgroup& cocycles) {
  if (!unit_weights.contains(qualified)) throw InvariantViolation("qualified lattice not inside the unit weights");
  return DerivedSubgroups{perp(unit_weights), perp(qualified), perp(cocycles)};
}

AffineSemigroup quotient_action(const AffineSemigroup& s, const WeightedAction& action, const SubgroupOfG& h,
                                const ResourceCaps& caps) {
  return AffineSemigroup(weight_preimage(s, action, h.annihilator()), caps);
}

}  // namespace equidim
