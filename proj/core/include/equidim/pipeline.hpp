#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equidim/oracles.hpp"
#include "equidim/reduced_class.hpp"
#include "equidim/subgroups.hpp"

namespace equidim {

enum class Verdict { yes, no, unknown_capped };
const char* to_string(Verdict v);

struct PipelineOptions {
  int sweep_bound = 2;
  int wide_bound = 3;
  int degree_cap = 12;
  ResourceCaps caps;
  std::size_t workers = 0;  // 0 = hardware concurrency
};

struct StabilityReduction {
  AffineSemigroup ring;             // S ∩ wt^{-1}(U), the semigroup of X//𝒦
  CharacterSubgroup unit_weights;   // U
  SubgroupOfG stabilizer;           // 𝒦 = U^⊥
  bool was_stable = true;
  std::optional<Point> unstable_witness;  // Hilbert basis element with weight outside U
};

StabilityReduction stability_reduce(const AffineSemigroup& s, const WeightedAction& action,
                                    const ResourceCaps& caps = {});

struct TFactors {
  Integer t_tilde = 1;  // prime to the reflection order
  Integer t_r = 1;      // supported on primes of the reflection order
};

TFactors t_factorization(const Integer& t, const Integer& reflection_order);

struct ObstructionData {
  Integer t = 1, t_tilde = 1, t_r = 1;
  SubgroupOfG kernel;           // L
  SubgroupOfG reflections;      // ℜ
  SubgroupOfG f, h, obs;
  FiniteAbelianData reflection_restriction;  // ℜ|_X
  FiniteAbelianData f_restriction;
  FiniteAbelianData obs_restriction;         // Obs|_X
  // Recorded, not enforced: it fails on some equidimensional actions
  // (G_m by (0, -2, 3) on A^3/mu_3 gives t = 3, |Obs|_X| = 18).
  bool primes_divide_t = true;
};

// Requires finite t; ResourceCapError when F does not stabilize.
ObstructionData obstruction_subgroup(const ActionModel& m, const Integer& t);

struct CofreeDecision {
  Verdict verdict = Verdict::unknown_capped;
  std::size_t characters_tested = 0;
  std::optional<Character> non_free_character;
  std::vector<Point> non_free_generators;
  BoundedCofreeness oracle;
  std::size_t oracle_only_collisions = 0;  // collisions at characters outside the sweep
};

// Per-character freeness over the weight sweep, cross-checked against the
// bounded cofreeness oracle; disagreement throws InvariantViolation.
CofreeDecision decide_cofree(const ActionModel& m, const PipelineOptions& opt);

struct EquidimDecision {
  Verdict verdict = Verdict::unknown_capped;
  std::string reason;
  std::optional<Character> infinite_order_character;
  std::optional<ObstructionData> obstruction;
  std::optional<CofreeDecision> quotient_cofree;  // (X//Obs, G)
  bool t_consistent = true;
  NullFiberResult oracle;
  bool oracle_agrees = true;  // vacuous when the verdict is unknown
};

struct MainTheoremConditions {
  Order v;                                   // exp C~l
  std::optional<bool> isobaric_cofree;       // X//tor(v, Δ) cofree; unset when v is infinite
  bool cltilde_finite = false;
  bool exponents_equal = false;
  bool delta_quotient_equidimensional = false;
};

// Evaluates each condition independently; throws InvariantViolation unless all agree.
MainTheoremConditions main_theorem_conditions(const ActionModel& m, const QualifiedLattice& q,
                                              const ReducedClassData& rc, const PipelineOptions& opt);

struct Analysis {
  // The divisor theory needs a torus: with torsion in A every quantity below
  // except `cofree` and `input_oracle` is computed for the identity component.
  bool identity_component_used = false;
  WeightedAction torus_action;
  StabilityReduction stability;  // of (X, G^0)
  ActionModel input_model;        // (X, G)
  ActionModel model;              // stable reduction of (X, G^0)
  SubgroupOfG reflections;
  SubgroupOfG nonprincipal_reflections;
  FiniteAbelianData reflection_restriction;
  QualifiedLattice qualified;
  ReducedClassData reduced;
  EquidimDecision equidimensional;
  CofreeDecision cofree;          // of the input action
  CofreeDecision cofree_reduced;  // of `model`
  NullFiberResult input_oracle;   // (X, G)
  std::optional<MainTheoremConditions> main_theorem;
  std::optional<bool> obstruction_criterion;  // cofree ⇔ |Obs|_X| = 1, on equidimensional input
};

Analysis analyze(const WeightedAction& action, const PipelineOptions& opt = {});

// Requires an equidimensional verdict; compares cofreeness with |Obs|_X| = 1.
bool obstruction_criterion_check(const CofreeDecision& cofree, const ObstructionData& obs);

}  // namespace equidim
