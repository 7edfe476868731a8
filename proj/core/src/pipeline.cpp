#include "equidim/pipeline.hpp"

#include <algorithm>
#include <set>

#include "equidim/errors.hpp"
#include "equidim/parallel.hpp"

namespace equidim {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown_capped: return "unknown-capped";
  }
  return "?";
}

namespace {

// Largest divisor of n supported on the primes of m.
Integer part_over_primes_of(Integer n, const Integer& m) {
  Integer part = 1;
  for (Integer g = gcd(n, m); g > 1; g = gcd(n, m)) {
    n /= g;
    part *= g;
  }
  return part;
}

FiniteAbelianData finite_restriction(const SubgroupOfG& h, const SubgroupOfG& l, const char* what) {
  auto d = restriction_data(h, l);
  if (!d) throw InvariantViolation(std::string(what) + " is not finite modulo the kernel of the action");
  return *d;
}

}  // namespace

StabilityReduction stability_reduce(const AffineSemigroup& s, const WeightedAction& action, const ResourceCaps& caps) {
  StabilityReduction out;
  out.unit_weights = weight_unit_group(s, action, caps);
  out.stabilizer = perp(out.unit_weights);
  out.ring = quotient_action(s, action, out.stabilizer, caps);
  out.was_stable = out.ring.defining_lattice() == s.defining_lattice();
  for (const auto& h : s.hilbert_basis())
    if (!out.unit_weights.contains(weight_of(action, h))) {
      out.unstable_witness = h;
      break;
    }
  if (out.was_stable == out.unstable_witness.has_value())
    throw InvariantViolation("stability witness disagrees with the reduced semigroup");
  return out;
}

TFactors t_factorization(const Integer& t, const Integer& reflection_order) {
  if (t < 1 || reflection_order < 1) throw InputError("t and the reflection order must be positive");
  TFactors f;
  f.t_r = part_over_primes_of(t, reflection_order);
  f.t_tilde = t / f.t_r;
  return f;
}

ObstructionData obstruction_subgroup(const ActionModel& m, const Integer& t) {
  const auto& a = m.action();
  ObstructionData d;
  d.t = t;
  d.kernel = ineffective_kernel(m.ring(), a);
  d.reflections = pseudo_reflection_group(m, false);
  d.reflection_restriction = finite_restriction(d.reflections, d.kernel, "pseudo-reflection group");
  TFactors tf = t_factorization(t, d.reflection_restriction.order);
  d.t_tilde = tf.t_tilde;
  d.t_r = tf.t_r;

  // F: tor((t^R)^k, L) ∩ R for k large
  const auto& bl = d.kernel.annihilator();
  const auto& br = d.reflections.annihilator();
  Integer power = d.t_r;
  CharacterSubgroup bf = sum(scale(power, bl), br);
  for (int k = 0;; ++k) {
    if (k == 64) throw ResourceCapError("tor subgroup sequence did not stabilize");
    power *= d.t_r;
    CharacterSubgroup next = sum(scale(power, bl), br);
    if (next == bf) break;
    bf = std::move(next);
  }
  d.f = SubgroupOfG(bf);
  d.f_restriction = finite_restriction(d.f, d.kernel, "F");
  if (d.f_restriction.order != part_over_primes_of(d.reflection_restriction.order, d.t_r))
    throw InvariantViolation("F|_X is not the t^R-primary part of the reflection group");

  d.h = SubgroupOfG(intersect(scale(d.t_tilde, bl), scale(d.t_r, bf)));
  ActionModel quotient(a, quotient_action(m.ring(), a, d.h, m.caps()), m.caps());
  d.obs = pseudo_reflection_group(quotient, true);
  if (!d.obs.contains(d.kernel)) throw InvariantViolation("Obs does not contain the kernel of the action");
  d.obs_restriction = finite_restriction(d.obs, d.kernel, "Obs");
  d.primes_divide_t = part_over_primes_of(d.obs_restriction.order, t) == d.obs_restriction.order;
  return d;
}

CofreeDecision decide_cofree(const ActionModel& m, const PipelineOptions& opt) {
  const auto& a = m.action();
  const auto& hb = m.ring().hilbert_basis();
  std::set<Character> swept;
  std::vector<Character> weights;
  for (const auto& h : hb) weights.push_back(weight_of(a, h));
  CharacterSubgroup span(a.group, weights);
  for (const auto& c : box_sweep(a.group, span.generators(), opt.sweep_bound)) swept.insert(c.chi);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    swept.insert(weights[i]);
    for (std::size_t j = i; j < weights.size(); ++j) swept.insert(a.group.reduce(weights[i] + weights[j]));
  }
  std::vector<Character> chars;
  for (const auto& chi : swept)
    if (m.realized(chi)) chars.push_back(chi);

  CofreeDecision out;
  out.characters_tested = chars.size();
  std::vector<FreenessResult> free(chars.size());
  parallel_for(chars.size(), opt.workers, [&](std::size_t i) { free[i] = module_free_test(m, chars[i]); });

  out.oracle = bounded_cofreeness_oracle(m.ring(), m.invariants(), a, opt.degree_cap, opt.caps);
  std::set<Character> colliding(out.oracle.colliding_characters.begin(), out.oracle.colliding_characters.end());
  for (const auto& chi : colliding) {
    if (module_free_test(m, chi).free)
      throw InvariantViolation("bounded oracle found two dependent module generators of a free character");
    if (!swept.count(chi)) ++out.oracle_only_collisions;
  }
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (free[i].free) continue;
    const Point& w = free[i].witness;
    const Point& second = *free[i].second;
    if (std::max(degree(w), degree(second)) <= opt.degree_cap && !colliding.count(chars[i]))
      throw InvariantViolation("bounded oracle missed a non-free character within its degree cap");
    // lowest-degree certificate
    if (!out.non_free_character || degree(second) < degree(out.non_free_generators[1])) {
      out.non_free_character = chars[i];
      out.non_free_generators = {w, second};
    }
  }
  if (!out.non_free_character && out.oracle.witness_character) {
    out.non_free_character = out.oracle.witness_character;
    out.non_free_generators = out.oracle.witness;
  }
  out.verdict = out.non_free_character ? Verdict::no : Verdict::yes;
  return out;
}

MainTheoremConditions main_theorem_conditions(const ActionModel& m, const QualifiedLattice& q,
                                              const ReducedClassData& rc, const PipelineOptions& opt) {
  const auto& a = m.action();
  MainTheoremConditions c;
  c.v = rc.cltilde_exponent;
  c.cltilde_finite = rc.cltilde_exponent.has_value();
  c.exponents_equal = rc.urcl_exponent && rc.cltilde_exponent && *rc.urcl_exponent == *rc.cltilde_exponent;

  AffineSemigroup by_delta = quotient_action(m.ring(), a, perp(q.lattice), opt.caps);
  c.delta_quotient_equidimensional = null_fiber_dimension(by_delta, m.invariants()).equidimensional();

  if (c.v) {
    SubgroupOfG tor_v(scale(*c.v, q.lattice));
    ActionModel by_tor(a, quotient_action(m.ring(), a, tor_v, opt.caps), opt.caps);
    c.isobaric_cofree = decide_cofree(by_tor, opt).verdict == Verdict::yes;
  }
  bool all = c.cltilde_finite;
  bool agree = c.exponents_equal == all && c.delta_quotient_equidimensional == all &&
               (!c.isobaric_cofree || *c.isobaric_cofree == all);
  if (!agree) throw InvariantViolation("main theorem conditions disagree");
  return c;
}

bool obstruction_criterion_check(const CofreeDecision& cofree, const ObstructionData& obs) {
  return (cofree.verdict == Verdict::yes) == (obs.obs_restriction.order == 1);
}

Analysis analyze(const WeightedAction& action, const PipelineOptions& opt) {
  Analysis out;
  AffineSemigroup s = build_semigroup(action, opt.caps);
  out.input_model = ActionModel(action, s, opt.caps);
  out.identity_component_used = !action.group.torsion.empty();
  out.torus_action = identity_component(action);
  const WeightedAction& torus = out.torus_action;
  out.stability = stability_reduce(s, torus, opt.caps);
  if (out.stability.was_stable && !out.identity_component_used)
    out.model = out.input_model;
  else
    out.model = ActionModel(torus, out.stability.ring, opt.caps);
  const ActionModel& m = out.model;

  out.reflections = pseudo_reflection_group(m, false);
  out.nonprincipal_reflections = pseudo_reflection_group(m, true);
  out.reflection_restriction =
      finite_restriction(out.reflections, ineffective_kernel(m.ring(), torus), "pseudo-reflection group");
  out.qualified = qualified_lattice(m, out.reflections);
  out.reduced = reduced_class_groups(m, out.qualified, opt.sweep_bound, opt.workers);

  auto& eq = out.equidimensional;
  const auto& rc = out.reduced;
  if (!rc.stable) {
    eq.verdict = Verdict::unknown_capped;
    eq.reason = "reduced class groups grew at sweep bound " + std::to_string(rc.sweep_bound + 1);
  } else if (!rc.t()) {
    eq.verdict = Verdict::no;
    eq.reason = "the reduced class group is not torsion";
    for (const auto& e : rc.entries)
      if (!e.module_order) {
        eq.infinite_order_character = e.chi;
        break;
      }
  } else {
    const Integer t = *rc.t();
    eq.t_consistent = t_consistency_check(m, out.qualified, t, opt.wide_bound, opt.workers);
    if (!eq.t_consistent) {
      eq.verdict = Verdict::unknown_capped;
      eq.reason = "t does not kill the classes of the wider sweep";
    } else {
      eq.obstruction = obstruction_subgroup(m, t);
      ActionModel by_obs(torus, quotient_action(m.ring(), torus, eq.obstruction->obs, opt.caps), opt.caps);
      eq.quotient_cofree = decide_cofree(by_obs, opt);
      eq.verdict = eq.quotient_cofree->verdict;
      eq.reason = eq.verdict == Verdict::yes ? "t finite and X//Obs cofree" : "X//Obs is not cofree";
    }
  }
  eq.oracle = null_fiber_dimension(m.ring(), m.invariants());
  eq.oracle_agrees = eq.verdict == Verdict::unknown_capped || (eq.verdict == Verdict::yes) == eq.oracle.equidimensional();
  out.input_oracle = null_fiber_dimension(out.input_model.ring(), out.input_model.invariants());

  out.cofree_reduced = decide_cofree(m, opt);
  const bool same_model = out.stability.was_stable && !out.identity_component_used;
  out.cofree = same_model ? out.cofree_reduced : decide_cofree(out.input_model, opt);

  if (rc.stable) out.main_theorem = main_theorem_conditions(m, out.qualified, rc, opt);
  if (eq.verdict == Verdict::yes) out.obstruction_criterion = obstruction_criterion_check(out.cofree_reduced, *eq.obstruction);
  return out;
}

}  // namespace equidim
