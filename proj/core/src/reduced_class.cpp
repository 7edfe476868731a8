#include "equidim/reduced_class.hpp"

#include <algorithm>
#include <map>

#include "equidim/errors.hpp"
#include "equidim/parallel.hpp"

namespace equidim {

namespace {

// S ∩ F_P: the face of S cut out by the facet's coordinates.
AffineSemigroup face_semigroup(const AffineSemigroup& s, const FacetPrime& p, const ResourceCaps& caps) {
  const std::size_t n = s.ambient_dim();
  std::vector<IntVector> keep;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::find(p.coordinates.begin(), p.coordinates.end(), j) != p.coordinates.end()) continue;
    IntVector e(n);
    e[j] = 1;
    keep.push_back(std::move(e));
  }
  return AffineSemigroup(intersect(s.defining_lattice(), Sublattice(n, std::move(keep))), caps);
}

Sublattice generated(const ClassGroupData& cl, const std::vector<IntVector>& divisors) {
  std::vector<IntVector> gens = divisors;
  for (std::size_t j = 0; j < cl.presentation().cols(); ++j) gens.push_back(cl.presentation().column(j));
  return Sublattice(cl.presentation().rows(), std::move(gens));
}

Order exponent_of(const std::vector<Integer>& factors) {
  auto d = finite_data(factors);
  if (!d) return std::nullopt;
  return d->exponent;
}

}  // namespace

QualifiedLattice qualified_lattice(const ActionModel& m, const SubgroupOfG& reflections) {
  const auto& s = m.ring();
  const auto& action = m.action();
  CharacterSubgroup lambda = intersect(weight_unit_group(s, m.invariants(), action), reflections.annihilator());
  auto blown = m.classification().of_tier(FacetTier::ht2plus);
  for (std::size_t p : blown) {
    AffineSemigroup face = face_semigroup(s, s.facets()[p], m.caps());
    lambda = intersect(lambda, weight_unit_group(face, action, m.caps()));
  }
  return QualifiedLattice{lambda, blown.empty() ? "exact-pde" : "exact-faces"};
}

std::vector<SweepCharacter> box_sweep(const CharacterGroup& g, const std::vector<Character>& basis, int bound) {
  std::map<Character, int> level;
  const std::size_t k = basis.size();
  std::vector<long> n(k, -bound);
  while (true) {
    Character chi = g.zero();
    int lv = 0;
    for (std::size_t i = 0; i < k; ++i) {
      chi = chi + Integer(n[i]) * basis[i];
      lv = std::max(lv, static_cast<int>(std::abs(n[i])));
    }
    chi = g.reduce(std::move(chi));
    auto [it, fresh] = level.emplace(std::move(chi), lv);
    if (!fresh) it->second = std::min(it->second, lv);
    std::size_t i = 0;
    while (i < k && n[i] == bound) n[i++] = -bound;
    if (i == k) break;
    ++n[i];
  }
  std::vector<SweepCharacter> out;
  for (auto& [chi, lv] : level) out.push_back({chi, lv});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.level < b.level; });
  return out;
}

ReducedClassData reduced_class_groups(const ActionModel& m, const QualifiedLattice& q, int sweep_bound,
                                      std::size_t workers) {
  if (sweep_bound < 0) throw InputError("sweep bound must be nonnegative", "/options/sweep_bound");
  ReducedClassData out;
  out.sweep_bound = sweep_bound;
  auto chars = box_sweep(m.action().group, q.basis(), sweep_bound + 1);
  out.entries.resize(chars.size());
  std::vector<IntVector> divisors(chars.size()), modules(chars.size());
  parallel_for(chars.size(), workers, [&](std::size_t i) {
    const Character& chi = chars[i].chi;
    SweepEntry e;
    e.chi = chi;
    e.level = chars[i].level;
    divisors[i] = minimal_effective_divisor(m, chi).coeffs;
    modules[i] = module_divisor_at(m, m.generators(chi).front()).coeffs;
    e.divisor_class = m.cl_ring().class_of(divisors[i]);
    e.module_class = module_class(m, chi);
    e.divisor_order = m.cl_ring().order_of(divisors[i]);
    e.module_order = m.cl_invariants().order_of(modules[i]);
    // The orders agree once [R_chi] is torsion; a principal D(chi) can sit
    // under a module class of infinite order.
    if (e.module_order && e.divisor_order != e.module_order)
      throw InvariantViolation("ord[D(chi)] = " + to_string(e.divisor_order) + " but ord[R_chi] = " +
                               to_string(e.module_order));
    out.entries[i] = std::move(e);
  });

  std::vector<IntVector> d_k, d_wide, r_k, r_wide;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    d_wide.push_back(divisors[i]);
    r_wide.push_back(modules[i]);
    if (chars[i].level <= sweep_bound) {
      d_k.push_back(divisors[i]);
      r_k.push_back(modules[i]);
    }
  }
  out.urcl = m.cl_ring().group().subgroup_invariants(d_k);
  out.cltilde = m.cl_invariants().group().subgroup_invariants(r_k);
  out.urcl_exponent = exponent_of(out.urcl);
  out.cltilde_exponent = exponent_of(out.cltilde);
  out.stable = generated(m.cl_ring(), d_k) == generated(m.cl_ring(), d_wide) &&
               generated(m.cl_invariants(), r_k) == generated(m.cl_invariants(), r_wide);
  if (out.cltilde_exponent && out.urcl_exponent != out.cltilde_exponent)
    throw InvariantViolation("exp UrCl = " + to_string(out.urcl_exponent) + " but exp C~l = " +
                             to_string(out.cltilde_exponent));
  return out;
}

bool t_consistency_check(const ActionModel& m, const QualifiedLattice& q, const Integer& t, int wide_bound,
                         std::size_t workers) {
  auto chars = box_sweep(m.action().group, q.basis(), wide_bound);
  std::vector<char> ok(chars.size());
  parallel_for(chars.size(), workers, [&](std::size_t i) {
    ok[i] = stanley_free_test(m, m.action().group.reduce(t * chars[i].chi)).free;
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

}  // namespace equidim
