#include "equidim/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "equidim/errors.hpp"

namespace equidim {

// ---------------------------------------------------------------- characters

Character CharacterGroup::reduce(Character chi) const {
  if (chi.size() != dimension()) throw InputError("character has wrong length");
  for (std::size_t j = 0; j < torsion.size(); ++j) chi[free_rank + j] = mod_floor(chi[free_rank + j], torsion[j]);
  return chi;
}

Sublattice CharacterGroup::relations() const {
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < torsion.size(); ++j) {
    IntVector g(dimension());
    g[free_rank + j] = torsion[j];
    gens.push_back(std::move(g));
  }
  return Sublattice(dimension(), std::move(gens));
}

CharacterSubgroup::CharacterSubgroup(const CharacterGroup& group, std::vector<Character> generators)
    : group_(group) {
  Sublattice t = group.relations();
  for (const auto& b : t.basis()) generators.push_back(b);
  lattice_ = Sublattice(group.dimension(), std::move(generators));
}

CharacterSubgroup::CharacterSubgroup(const CharacterGroup& group, const Sublattice& lattice)
    : group_(group), lattice_(sum(lattice, group.relations())) {}

CharacterSubgroup CharacterSubgroup::whole(const CharacterGroup& g) {
  return CharacterSubgroup(g, Sublattice::full(g.dimension()));
}

CharacterSubgroup CharacterSubgroup::zero(const CharacterGroup& g) { return CharacterSubgroup(g, std::vector<Character>{}); }

std::vector<Character> CharacterSubgroup::generators() const {
  std::vector<Character> out;
  for (const auto& b : lattice_.basis()) {
    Character c = group_.reduce(b);
    if (!is_zero(c)) out.push_back(std::move(c));
  }
  return out;
}

CharacterSubgroup sum(const CharacterSubgroup& a, const CharacterSubgroup& b) {
  return CharacterSubgroup(a.group(), sum(a.lattice(), b.lattice()));
}

CharacterSubgroup intersect(const CharacterSubgroup& a, const CharacterSubgroup& b) {
  return CharacterSubgroup(a.group(), intersect(a.lattice(), b.lattice()));
}

CharacterSubgroup scale(const Integer& m, const CharacterSubgroup& b) {
  return CharacterSubgroup(b.group(), scale(m, b.lattice()));
}

std::vector<Integer> quotient_invariants(const CharacterSubgroup& a, const CharacterSubgroup& b) {
  return quotient_invariants(a.lattice(), b.lattice());
}

// ---------------------------------------------------------------- actions

void WeightedAction::normalize() {
  const std::size_t n = ambient_dim;
  for (std::size_t j = 0; j < group.torsion.size(); ++j)
    if (group.torsion[j] < 2)
      throw InputError("torsion modulus must be at least 2", "/torsion_moduli/" + std::to_string(j));
  if (weights.size() != n)
    throw InputError("expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()), "/weights");
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i].size() != group.dimension())
      throw InputError("weight has " + std::to_string(weights[i].size()) + " coordinates, expected " +
                           std::to_string(group.dimension()),
                       "/weights/" + std::to_string(i));
    weights[i] = group.reduce(weights[i]);
  }
  for (std::size_t k = 0; k < congruences.size(); ++k) {
    if (congruences[k].coeffs.size() != n)
      throw InputError("congruence has wrong number of coefficients",
                       "/quotient_congruences/" + std::to_string(k) + "/coeffs");
    if (congruences[k].modulus < 0)
      throw InputError("congruence modulus must be nonnegative",
                       "/quotient_congruences/" + std::to_string(k) + "/modulus");
  }
}

WeightedAction identity_component(const WeightedAction& action) {
  WeightedAction out = action;
  out.group.torsion.clear();
  for (auto& w : out.weights) w.resize(out.group.free_rank);
  return out;
}

IntMatrix WeightedAction::weight_matrix() const { return IntMatrix::from_columns(weights, group.dimension()); }

Sublattice defining_lattice(const WeightedAction& action) {
  const std::size_t n = action.ambient_dim;
  if (action.congruences.empty()) return Sublattice::full(n);
  IntMatrix c(action.congruences.size(), n);
  std::vector<IntVector> target;
  for (std::size_t k = 0; k < action.congruences.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) c(k, j) = action.congruences[k].coeffs[j];
    if (action.congruences[k].modulus != 0) {
      IntVector t(action.congruences.size());
      t[k] = action.congruences[k].modulus;
      target.push_back(std::move(t));
    }
  }
  return preimage(c, Sublattice(action.congruences.size(), std::move(target)));
}

// ---------------------------------------------------------------- facets

std::int64_t FacetPrime::value(const Point& a) const { return a[coordinate] / scale; }

Integer FacetPrime::value(const IntVector& a) const {
  if (a[coordinate] % scale != 0) throw InvariantViolation("facet functional not integral on ZS");
  return a[coordinate] / scale;
}

AffineSemigroup::AffineSemigroup(Sublattice defining_lattice, const ResourceCaps& caps)
    : lattice_(std::move(defining_lattice)) {
  const std::size_t n = lattice_.ambient_rank();
  hilbert_basis_ = orthant_hilbert_basis(lattice_, caps);
  std::vector<IntVector> hb;
  for (const auto& h : hilbert_basis_) {
    if (degree(h) <= 0) throw InputError("not conical: degree functional not positive on the semigroup");
    hb.push_back(to_integers(h));
  }
  group_ = Sublattice(n, hb);
  const std::size_t r = group_.rank();
  std::map<std::vector<std::size_t>, std::size_t> by_zero_set;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> zeros;
    std::vector<IntVector> zv;
    std::int64_t g = 0;
    for (std::size_t k = 0; k < hilbert_basis_.size(); ++k) {
      if (hilbert_basis_[k][i] == 0) {
        zeros.push_back(k);
        zv.push_back(hb[k]);
      }
      g = std::gcd(g, hilbert_basis_[k][i]);
    }
    if (g == 0) continue;  // coordinate identically zero on S
    if (rank_of(zv, n) + 1 != r) continue;
    auto it = by_zero_set.find(zeros);
    if (it != by_zero_set.end()) {
      facets_[it->second].coordinates.push_back(i);
      continue;
    }
    FacetPrime p;
    p.id = facets_.size();
    p.coordinates = {i};
    p.coordinate = i;
    p.scale = g;
    for (std::size_t k : zeros) p.face_generators.push_back(hilbert_basis_[k]);
    by_zero_set.emplace(zeros, facets_.size());
    facets_.push_back(std::move(p));
  }
}

bool AffineSemigroup::contains(const Point& a) const {
  if (a.size() != ambient_dim()) return false;
  if (std::any_of(a.begin(), a.end(), [](std::int64_t x) { return x < 0; })) return false;
  return lattice_.contains(to_integers(a));
}

std::vector<std::size_t> AffineSemigroup::zero_coordinates() const {
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < ambient_dim(); ++i)
    if (std::all_of(hilbert_basis_.begin(), hilbert_basis_.end(), [i](const Point& h) { return h[i] == 0; }))
      z.push_back(i);
  return z;
}

IntVector AffineSemigroup::valuations(const Point& a) const {
  IntVector v;
  for (const auto& p : facets_) v.emplace_back(static_cast<long>(p.value(a)));
  return v;
}

AffineSemigroup build_semigroup(const WeightedAction& action, const ResourceCaps& caps) {
  return AffineSemigroup(defining_lattice(action), caps);
}

std::vector<Point> hilbert_basis(const IntMatrix& equations, const std::vector<Congruence>& congruences,
                                 const ResourceCaps& caps) {
  const std::size_t n = equations.rows() ? equations.cols()
                        : congruences.empty() ? 0
                                              : congruences.front().coeffs.size();
  WeightedAction a;
  a.ambient_dim = n;
  a.congruences = congruences;
  for (std::size_t i = 0; i < equations.rows(); ++i) a.congruences.push_back({equations.row(i), 0});
  return orthant_hilbert_basis(defining_lattice(a), caps);
}

// ---------------------------------------------------------------- weights and fibers

Character weight_of(const WeightedAction& action, const IntVector& a) {
  Character chi = action.group.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < chi.size(); ++k) chi[k] += a[i] * action.weights[i][k];
  return action.group.reduce(std::move(chi));
}

Character weight_of(const WeightedAction& action, const Point& a) { return weight_of(action, to_integers(a)); }

Sublattice weight_preimage(const AffineSemigroup& s, const WeightedAction& action, const CharacterSubgroup& b) {
  return intersect(s.defining_lattice(), preimage(action.weight_matrix(), b.lattice()));
}

AffineSemigroup invariant_semigroup(const AffineSemigroup& s, const WeightedAction& action,
                                    const ResourceCaps& caps) {
  return AffineSemigroup(weight_preimage(s, action, CharacterSubgroup::zero(action.group)), caps);
}

std::optional<FiberCoset> fiber_coset(const AffineSemigroup& s, const WeightedAction& action,
                                      const Character& chi) {
  const CharacterGroup& g = action.group;
  const Sublattice& l = s.defining_lattice();
  const std::size_t n = s.ambient_dim(), k = l.rank();
  Sublattice t = g.relations();
  // W * B * y - T * z = chi
  IntMatrix wb = action.weight_matrix() * l.basis_matrix();
  IntMatrix m(g.dimension(), k + t.rank());
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = wb(i, j);
    for (std::size_t j = 0; j < t.rank(); ++j) m(i, k + j) = -t.basis()[j][i];
  }
  Character target = g.reduce(chi);
  IntVector offset(n);
  if (g.dimension() > 0) {
    auto sol = solve_diophantine(m, target);
    if (!sol) return std::nullopt;
    IntVector y(sol->particular.begin(), sol->particular.begin() + static_cast<long>(k));
    offset = l.basis_matrix() * y;
  }
  return FiberCoset{offset, weight_preimage(s, action, CharacterSubgroup::zero(g))};
}

std::vector<Point> fiber_generators(const AffineSemigroup& s, const WeightedAction& action,
                                    const Character& chi, const ResourceCaps& caps) {
  auto coset = fiber_coset(s, action, chi);
  if (!coset) return {};
  return orthant_coset_minima(coset->offset, coset->lattice, caps);
}

std::optional<Point> fiber_sample(const AffineSemigroup& s, const WeightedAction& action,
                                  const Character& chi, const ResourceCaps& caps) {
  auto gens = fiber_generators(s, action, chi, caps);
  if (gens.empty()) return std::nullopt;
  return gens.front();
}

bool fiber_avoids_prime(const AffineSemigroup& s, const WeightedAction& action, const Character& chi,
                        const FacetPrime& p, const ResourceCaps& caps) {
  auto gens = fiber_generators(s, action, chi, caps);
  return std::any_of(gens.begin(), gens.end(), [&](const Point& a) { return p.value(a) == 0; });
}

std::vector<Point> enumerate_fiber(const AffineSemigroup& s, const WeightedAction& action,
                                   const Character& chi, int degree_cap, const ResourceCaps& caps) {
  auto coset = fiber_coset(s, action, chi);
  if (!coset) return {};
  return enumerate_orthant_coset(coset->offset, coset->lattice, degree_cap, caps);
}

std::vector<std::size_t> invariant_zero_coordinates(const AffineSemigroup& s, const AffineSemigroup& s_g) {
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < s.ambient_dim(); ++i) {
    const auto& hb = s_g.hilbert_basis();
    if (std::all_of(hb.begin(), hb.end(), [i](const Point& h) { return h[i] == 0; })) z.push_back(i);
  }
  return z;
}

CharacterSubgroup weight_unit_group(const AffineSemigroup& s, const AffineSemigroup& s_g,
                                    const WeightedAction& action) {
  auto z = invariant_zero_coordinates(s, s_g);
  std::vector<Character> gens;
  for (const auto& h : s.hilbert_basis())
    if (std::all_of(z.begin(), z.end(), [&](std::size_t i) { return h[i] == 0; }))
      gens.push_back(weight_of(action, h));
  return CharacterSubgroup(action.group, std::move(gens));
}

CharacterSubgroup weight_unit_group(const AffineSemigroup& s, const WeightedAction& action,
                                    const ResourceCaps& caps) {
  return weight_unit_group(s, invariant_semigroup(s, action, caps), action);
}

}  // namespace equidim
