#pragma once

#include <optional>
#include <vector>

#include "equidim/lattice.hpp"
#include "equidim/orthant.hpp"

namespace equidim {

using Character = IntVector;

// A = Z^r ⊕ Z/m_1 ⊕ ... ⊕ Z/m_s, coordinates free part first.
struct CharacterGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2

  std::size_t dimension() const { return free_rank + torsion.size(); }
  bool is_trivial() const { return dimension() == 0; }
  Character zero() const { return Character(dimension()); }
  Character reduce(Character chi) const;
  // T ⊆ Z^{r+s}: the lattice of relations m_j e_{r+j}.
  Sublattice relations() const;
  friend bool operator==(const CharacterGroup&, const CharacterGroup&) = default;
};

// Subgroup of A, stored as its preimage in Z^{r+s} (which contains T).
class CharacterSubgroup {
 public:
  CharacterSubgroup() = default;
  CharacterSubgroup(const CharacterGroup& group, std::vector<Character> generators);
  CharacterSubgroup(const CharacterGroup& group, const Sublattice& lattice);  // adds T

  static CharacterSubgroup whole(const CharacterGroup& g);
  static CharacterSubgroup zero(const CharacterGroup& g);

  const CharacterGroup& group() const { return group_; }
  const Sublattice& lattice() const { return lattice_; }
  bool contains(const Character& chi) const { return lattice_.contains(chi); }
  bool contains(const CharacterSubgroup& other) const { return lattice_.contains(other.lattice_); }
  // Nonzero reduced basis vectors; they generate the subgroup.
  std::vector<Character> generators() const;

  friend bool operator==(const CharacterSubgroup& a, const CharacterSubgroup& b) {
    return a.lattice_ == b.lattice_;
  }

 private:
  CharacterGroup group_;
  Sublattice lattice_;
};

CharacterSubgroup sum(const CharacterSubgroup& a, const CharacterSubgroup& b);
CharacterSubgroup intersect(const CharacterSubgroup& a, const CharacterSubgroup& b);
// m·B + T
CharacterSubgroup scale(const Integer& m, const CharacterSubgroup& b);
// Invariant factors of a/b for b ⊆ a.
std::vector<Integer> quotient_invariants(const CharacterSubgroup& a, const CharacterSubgroup& b);

struct Congruence {
  IntVector coeffs;
  Integer modulus;  // 0 means equation
};

struct WeightedAction {
  std::size_t ambient_dim = 0;
  CharacterGroup group;
  std::vector<Character> weights;
  std::vector<Congruence> congruences;

  // Throws InputError; reduces torsion coordinates in place.
  void normalize();
  // (r+s) x n matrix with the weights as columns.
  IntMatrix weight_matrix() const;
};

// The same ring acted on by the identity component G^0 (torsion coordinates
// dropped). X//G is a finite quotient of X//G^0, so fiber dimensions agree.
WeightedAction identity_component(const WeightedAction& action);

// {a in Z^n : all congruences hold}
Sublattice defining_lattice(const WeightedAction& action);

struct FacetPrime {
  std::size_t id = 0;
  std::vector<std::size_t> coordinates;  // coordinates whose zero set is this facet
  std::size_t coordinate = 0;            // representative
  std::int64_t scale = 1;                // u_P(a) = a[coordinate] / scale on ZS
  std::vector<Point> face_generators;

  std::int64_t value(const Point& a) const;
  Integer value(const IntVector& a) const;
};

// S = L ∩ Z_{>=0}^n.
class AffineSemigroup {
 public:
  AffineSemigroup() = default;
  AffineSemigroup(Sublattice defining_lattice, const ResourceCaps& caps);

  std::size_t ambient_dim() const { return lattice_.ambient_rank(); }
  const Sublattice& defining_lattice() const { return lattice_; }
  const Sublattice& group() const { return group_; }  // ZS
  const std::vector<Point>& hilbert_basis() const { return hilbert_basis_; }
  const std::vector<FacetPrime>& facets() const { return facets_; }
  std::size_t rank() const { return group_.rank(); }
  bool contains(const Point& a) const;
  // Coordinates vanishing on all of S.
  std::vector<std::size_t> zero_coordinates() const;
  // Valuation vector (u_P(a))_P.
  IntVector valuations(const Point& a) const;

 private:
  Sublattice lattice_;
  Sublattice group_;
  std::vector<Point> hilbert_basis_;
  std::vector<FacetPrime> facets_;
};

AffineSemigroup build_semigroup(const WeightedAction& action, const ResourceCaps& caps = {});

// Hilbert basis of {a >= 0 : E a = 0, congruences}, graded-lex.
std::vector<Point> hilbert_basis(const IntMatrix& equations, const std::vector<Congruence>& congruences,
                                 const ResourceCaps& caps = {});

Character weight_of(const WeightedAction& action, const Point& a);
Character weight_of(const WeightedAction& action, const IntVector& a);

// {a in L_S : wt(a) in B}
Sublattice weight_preimage(const AffineSemigroup& s, const WeightedAction& action, const CharacterSubgroup& b);
AffineSemigroup invariant_semigroup(const AffineSemigroup& s, const WeightedAction& action,
                                    const ResourceCaps& caps = {});

// Fiber {a in S : wt(a) = chi} = (offset + lattice) ∩ orthant; nullopt when
// even the lattice coset is empty.
struct FiberCoset {
  IntVector offset;
  Sublattice lattice;
};
std::optional<FiberCoset> fiber_coset(const AffineSemigroup& s, const WeightedAction& action,
                                      const Character& chi);

// Minimal generators of R_chi as an R^G-module; empty iff R_chi = 0.
std::vector<Point> fiber_generators(const AffineSemigroup& s, const WeightedAction& action,
                                    const Character& chi, const ResourceCaps& caps = {});
std::optional<Point> fiber_sample(const AffineSemigroup& s, const WeightedAction& action,
                                  const Character& chi, const ResourceCaps& caps = {});
bool fiber_avoids_prime(const AffineSemigroup& s, const WeightedAction& action, const Character& chi,
                        const FacetPrime& p, const ResourceCaps& caps = {});
std::vector<Point> enumerate_fiber(const AffineSemigroup& s, const WeightedAction& action,
                                   const Character& chi, int degree_cap, const ResourceCaps& caps = {});

// Coordinates vanishing on the invariant semigroup: they cut out the
// smallest face of cone(S) containing S_G.
std::vector<std::size_t> invariant_zero_coordinates(const AffineSemigroup& s, const AffineSemigroup& s_g);

// The group of chi with both chi and -chi realized in wt(S).
CharacterSubgroup weight_unit_group(const AffineSemigroup& s, const WeightedAction& action,
                                    const ResourceCaps& caps = {});
CharacterSubgroup weight_unit_group(const AffineSemigroup& s, const AffineSemigroup& s_g,
                                    const WeightedAction& action);

}  // namespace equidim
