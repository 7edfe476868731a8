#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "equidim/semigroup.hpp"

namespace equidim {

enum class FacetTier { ht0, ht1, ht2plus };
const char* to_string(FacetTier t);

struct FacetClass {
  FacetTier tier = FacetTier::ht0;
  std::size_t q = 0;     // facet of S_G, meaningful for ht1
  std::int64_t e = 0;    // ramification index, meaningful for ht1
};

struct FacetClassification {
  std::vector<FacetClass> facets;                // indexed by facet id of S_X
  std::vector<std::vector<std::size_t>> fibers;  // X_q, indexed by facet id of S_G

  std::vector<std::size_t> of_tier(FacetTier t) const;
};

FacetClassification classify_facets(const AffineSemigroup& s_x, const AffineSemigroup& s_g);

enum class DivisorTarget { ring, invariants };

struct DivisorVector {
  DivisorTarget target = DivisorTarget::ring;
  IntVector coeffs;  // one per facet of the target ring

  bool is_effective() const;
  friend bool operator==(const DivisorVector&, const DivisorVector&) = default;
};

// Cl(K[S]) = Z^{facets} / (valuations of ZS).
class ClassGroupData {
 public:
  ClassGroupData() = default;
  explicit ClassGroupData(const AffineSemigroup& s);

  const FgAbGroup& group() const { return group_; }
  // facets x rank(ZS), column j = valuations of the j-th basis vector of ZS
  const IntMatrix& presentation() const { return presentation_; }
  IntVector class_of(const IntVector& d) const { return group_.coordinates(d); }
  Order order_of(const IntVector& d) const { return group_.order_of(d); }
  bool is_principal(const IntVector& d) const { return group_.is_zero(d); }
  IntVector prime_divisor(std::size_t facet) const;

 private:
  IntMatrix presentation_;
  FgAbGroup group_;
};

ClassGroupData class_group(const AffineSemigroup& s);

// Coefficient at q: max over P in X_q of ceil(j_P / e(P,q)).
DivisorVector contraction_divisor(const FacetClassification& cls, const IntVector& j_valuations);

// Everything the divisor calculus needs about one action (X, G): S_X, S_G,
// the facet classification and both class groups. Fiber generator lists are
// memoized internally; all queries are logically const and thread-safe.
class ActionModel {
 public:
  ActionModel() = default;
  ActionModel(WeightedAction action, AffineSemigroup s_x, const ResourceCaps& caps = {});

  const WeightedAction& action() const { return action_; }
  const ResourceCaps& caps() const { return caps_; }
  const AffineSemigroup& ring() const { return s_x_; }
  const AffineSemigroup& invariants() const { return s_g_; }
  const FacetClassification& classification() const { return cls_; }
  const ClassGroupData& cl_ring() const { return cl_x_; }
  const ClassGroupData& cl_invariants() const { return cl_g_; }

  // Minimal R^G-module generators of R_chi (graded-lex), empty iff R_chi = 0.
  const std::vector<Point>& generators(const Character& chi) const;
  bool realized(const Character& chi) const { return !generators(chi).empty(); }
  // ZS_G has full rank in {a in L : wt(a) = 0}, so every R_chi has rank <= 1.
  // Holds for stable actions; the divisor theory below assumes it.
  bool rank_one() const { return s_g_.rank() == s_g_.defining_lattice().rank(); }

 private:
  WeightedAction action_;
  ResourceCaps caps_;
  AffineSemigroup s_x_, s_g_;
  FacetClassification cls_;
  ClassGroupData cl_x_, cl_g_;
  struct Cache {
    std::mutex mu;
    std::map<Character, std::vector<Point>> fibers;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// D(chi) evaluated at a specific fiber element.
DivisorVector minimal_effective_divisor_at(const ActionModel& m, const Point& a);
// Divisor on R^G of the contraction of (1/x^a) R, whose class is [R_chi].
DivisorVector module_divisor_at(const ActionModel& m, const Point& a);

// D(chi); throws CharacterNotRealized. Checked against a second fiber element.
DivisorVector minimal_effective_divisor(const ActionModel& m, const Character& chi);
// Class coordinates of [R_chi] in Cl(R^G); checked against a second fiber element.
IntVector module_class(const ActionModel& m, const Character& chi);
Order module_class_order(const ActionModel& m, const Character& chi);

struct FreenessResult {
  bool free = false;
  Point witness;                    // a generator; R_chi = R^G x^witness when free
  std::optional<Point> second;      // another minimal generator when not free
};

// Stanley-type criterion, cross-checked against the exact-match feasibility
// test and the generator count; throws InvariantViolation on disagreement.
FreenessResult stanley_free_test(const ActionModel& m, const Character& chi);

// Freeness of R_chi for any action: the monomial module on the minimal
// generators g_i is free iff no g_i - g_j lies in ZS_G. On rank-one models
// this defers to stanley_free_test.
FreenessResult module_free_test(const ActionModel& m, const Character& chi);

struct FreeMultiple {
  Order divisor_order;  // ord [D(chi)] in Cl(R)
  Order module_order;   // ord [R_chi] in Cl(R^G)
  Order value;          // min {q : R_{q chi} free}
};

// Requires chi qualified; throws InvariantViolation when the two orders disagree.
FreeMultiple min_free_multiple(const ActionModel& m, const Character& chi);

// True iff no facet of S_X contracts to a prime of height >= 2.
bool no_blowing_up_check(const FacetClassification& cls);

// span{ sum_{P in X_q} e(P,q) P } + span{ P : P ht2plus }
Sublattice e_star_lattice(const FacetClassification& cls);

}  // namespace equidim
