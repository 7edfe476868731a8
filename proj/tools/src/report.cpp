#include "equidim_cli/report.hpp"

#include "equidim/errors.hpp"

namespace equidim::cli {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Order& o) { return o ? to_json(*o) : Json("infinite"); }

Json to_json(const Point& p) { return Json(p); }

Json to_json(const std::vector<Point>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(to_json(p));
  return out;
}

Json to_json(const std::vector<Character>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

Json to_json(const FiniteAbelianData& d) {
  return {{"invariant_factors", to_json(d.invariant_factors)}, {"order", to_json(d.order)}, {"exponent", to_json(d.exponent)}};
}

Json to_json(const NullFiberResult& r) {
  return {{"dimension", r.dimension},
          {"expected", r.expected},
          {"equidimensional", r.equidimensional()},
          {"witness_zero_coordinates", r.witness}};
}

Json to_json(const BoundedCofreeness& r) {
  Json out = {{"verdict", to_string(r.verdict)},
              {"degree_cap", r.degree_cap},
              {"module_basis_size", r.module_basis_size},
              {"colliding_characters", r.colliding_characters.size()}};
  if (r.witness_character) {
    out["witness_character"] = to_json(*r.witness_character);
    out["witness"] = to_json(r.witness);
  }
  return out;
}

Json to_json(const CofreeDecision& d) {
  Json out = {{"verdict", to_string(d.verdict)},
              {"characters_tested", d.characters_tested},
              {"oracle", to_json(d.oracle)},
              {"oracle_only_collisions", d.oracle_only_collisions}};
  if (d.non_free_character) {
    out["certificate"] = {{"non_free_character", to_json(*d.non_free_character)},
                          {"generators", to_json(d.non_free_generators)}};
  } else {
    out["certificate"] = {{"free_characters_tested", d.characters_tested}};
  }
  return out;
}

Json to_json(const ObstructionData& d) {
  return {{"t", to_json(d.t)},
          {"t_tilde", to_json(d.t_tilde)},
          {"t_R", to_json(d.t_r)},
          {"reflection_restriction", to_json(d.reflection_restriction)},
          {"f_restriction", to_json(d.f_restriction)},
          {"obs_restriction", to_json(d.obs_restriction)},
          {"h_annihilator", to_json(d.h.annihilator().generators())},
          {"obs_annihilator", to_json(d.obs.annihilator().generators())},
          {"obs_primes_divide_t", d.primes_divide_t}};
}

namespace {

Json facets_json(const ActionModel& m) {
  Json out = Json::array();
  const auto& cls = m.classification();
  for (std::size_t p = 0; p < m.ring().facets().size(); ++p) {
    const auto& f = m.ring().facets()[p];
    Json j = {{"coordinates", f.coordinates}, {"tier", to_string(cls.facets[p].tier)}};
    if (cls.facets[p].tier == FacetTier::ht1) {
      j["ramification"] = cls.facets[p].e;
      j["invariant_facet"] = cls.facets[p].q;
    }
    j["class"] = to_json(m.cl_ring().class_of(m.cl_ring().prime_divisor(p)));
    out.push_back(std::move(j));
  }
  return out;
}

// Everything the per-character commands share: the stable reduction of the
// identity component, on which D(chi) and the reduced class groups live.
struct Prepared {
  ActionModel input;
  WeightedAction torus;
  StabilityReduction stability;
  ActionModel model;
  bool model_is_input = true;
};

Prepared prepare(const InputSpec& spec) {
  const auto& a = spec.action;
  const auto& caps = spec.options.caps;
  Prepared p;
  AffineSemigroup s = build_semigroup(a, caps);
  p.input = ActionModel(a, s, caps);
  p.torus = identity_component(a);
  p.stability = stability_reduce(s, p.torus, caps);
  p.model_is_input = p.stability.was_stable && a.group.torsion.empty();
  p.model = p.model_is_input ? p.input : ActionModel(p.torus, p.stability.ring, caps);
  return p;
}

const char* model_name(bool is_input) { return is_input ? "input" : "stable reduction of the identity component"; }

Json invariants_report(const Prepared& p) {
  return {{"hilbert_basis_R", to_json(p.input.ring().hilbert_basis())},
          {"hilbert_basis_RG", to_json(p.input.invariants().hilbert_basis())},
          {"rank_R", p.input.ring().rank()},
          {"rank_RG", p.input.invariants().rank()},
          {"stable", p.stability.was_stable ? "yes" : "no"},
          {"unstable_witness", p.stability.unstable_witness ? to_json(*p.stability.unstable_witness) : Json()},
          {"unit_weights", to_json(p.stability.unit_weights.generators())},
          {"facets", facets_json(p.input)}};
}

Json class_group_json(const ClassGroupData& cl, std::size_t facets) {
  return {{"invariant_factors", to_json(cl.group().invariant_factors())}, {"facets", facets}};
}

Json equidim_json(const EquidimDecision& eq) {
  Json out = {{"verdict", to_string(eq.verdict)}, {"reason", eq.reason}, {"t_consistent", eq.t_consistent}};
  Json cert = Json::object();
  if (eq.infinite_order_character) cert["infinite_order_character"] = to_json(*eq.infinite_order_character);
  if (eq.obstruction) cert["obs_restriction"] = to_json(eq.obstruction->obs_restriction.invariant_factors);
  if (eq.quotient_cofree) cert["quotient_cofree"] = to_json(*eq.quotient_cofree);
  out["certificate"] = std::move(cert);
  out["oracle"] = to_json(eq.oracle);
  out["oracle_agrees"] = eq.oracle_agrees;
  return out;
}

}  // namespace

Json analysis_report(const InputSpec& spec, const Analysis& r) {
  const auto& eq = r.equidimensional;
  Json out;
  out["input"] = echo(spec);
  out["divisor_model"] = model_name(r.stability.was_stable && !r.identity_component_used);
  out["identity_component_used"] = r.identity_component_used;
  out["stable"] = {{"verdict", r.stability.was_stable ? "yes" : "no"},
                   {"unstable_witness", r.stability.unstable_witness ? to_json(*r.stability.unstable_witness) : Json()},
                   {"unit_weights", to_json(r.stability.unit_weights.generators())}};
  out["cl_R"] = to_json(r.input_model.cl_ring().group().invariant_factors());
  out["cl_RG"] = to_json(r.input_model.cl_invariants().group().invariant_factors());
  out["hilbert_basis_RG"] = to_json(r.input_model.invariants().hilbert_basis());
  out["urcl"] = to_json(r.reduced.urcl);
  out["cltilde"] = to_json(r.reduced.cltilde);
  out["reduced_sweep"] = {{"bound", r.reduced.sweep_bound},
                          {"stable", r.reduced.stable},
                          {"characters", r.reduced.entries.size()}};
  out["t"] = to_json(r.reduced.t());
  out["t_tilde"] = eq.obstruction ? to_json(eq.obstruction->t_tilde) : Json();
  out["t_R"] = eq.obstruction ? to_json(eq.obstruction->t_r) : Json();
  out["reflection_restriction"] = to_json(r.reflection_restriction);
  out["obs_restriction"] = eq.obstruction ? to_json(eq.obstruction->obs_restriction) : Json();
  out["obs_primes_divide_t"] = eq.obstruction ? Json(eq.obstruction->primes_divide_t) : Json();
  out["lambda_basis"] = to_json(r.qualified.basis());
  out["equidimensional"] = equidim_json(eq);
  out["cofree"] = to_json(r.cofree);
  out["cofree_divisor_model"] = to_json(r.cofree_reduced);

  Json mt;
  if (r.main_theorem) {
    const auto& c = *r.main_theorem;
    mt = {{"exp_cltilde", to_json(c.v)},
          {"cltilde_finite", c.cltilde_finite},
          {"exponents_equal", c.exponents_equal},
          {"delta_quotient_equidimensional", c.delta_quotient_equidimensional},
          {"isobaric_cofree", c.isobaric_cofree ? Json(*c.isobaric_cofree) : Json()}};
  }
  out["main_theorem_conditions"] = mt;
  out["oracle_agreement"] = {
      {"null_fiber", eq.oracle_agrees},
      {"null_fiber_input", to_json(r.input_oracle)},
      {"bounded_cofreeness", true},  // disagreement throws before a report exists
      {"obstruction_criterion", r.obstruction_criterion ? Json(*r.obstruction_criterion) : Json()}};
  out["provenance"] = {{"lambda", r.qualified.provenance},
                       {"reduced_class_groups", r.reduced.stable ? "swept-stable" : "swept-growing"},
                       {"verdicts", "exact"}};
  return out;
}

Json run_command(const std::string& command, const InputSpec& spec, const CommandArgs& args) {
  const auto& opt = spec.options;
  Json out;
  if (command == "analyze") {
    out = analysis_report(spec, analyze(spec.action, opt));
  } else if (command == "invariants") {
    out = invariants_report(prepare(spec));
  } else if (command == "class-group") {
    std::string of = args.of.value_or("both");
    if (of != "R" && of != "RG" && of != "both") throw InputError("--of must be R or RG", "--of");
    auto p = prepare(spec);
    if (of != "RG") out["cl_R"] = class_group_json(p.input.cl_ring(), p.input.ring().facets().size());
    if (of != "R") out["cl_RG"] = class_group_json(p.input.cl_invariants(), p.input.invariants().facets().size());
  } else if (command == "dchi") {
    if (!args.chi) throw InputError("dchi needs --chi", "--chi");
    auto p = prepare(spec);
    Character chi = parse_character(*args.chi, spec.action.group, "--chi");
    chi.resize(p.model.action().group.dimension());
    out["chi"] = to_json(chi);
    out["divisor_model"] = model_name(p.model_is_input);
    out["realized"] = p.model.realized(chi);
    if (p.model.realized(chi)) {
      auto d = minimal_effective_divisor(p.model, chi);
      out["divisor"] = to_json(d.coeffs);
      out["class"] = to_json(p.model.cl_ring().class_of(d.coeffs));
      out["order"] = to_json(p.model.cl_ring().order_of(d.coeffs));
      out["module_class_order"] = to_json(module_class_order(p.model, chi));
      out["facets"] = facets_json(p.model);
    }
  } else if (command == "free") {
    if (!args.chi) throw InputError("free needs --chi", "--chi");
    auto p = prepare(spec);
    Character chi = parse_character(*args.chi, spec.action.group, "--chi");
    out["chi"] = to_json(chi);
    out["realized"] = p.input.realized(chi);
    if (p.input.realized(chi)) {
      auto f = module_free_test(p.input, chi);
      out["free"] = f.free;
      out["generators"] = to_json(p.input.generators(chi));
      out["certificate"] = f.free ? Json{{"generator", to_json(f.witness)}}
                                  : Json{{"dependent_pair", to_json(std::vector<Point>{f.witness, *f.second})}};
      auto oracle = bounded_freeness_oracle(p.input.ring(), spec.action, chi, opt.degree_cap, opt.caps);
      out["oracle"] = {{"verdict", to_string(oracle.verdict)}, {"degree_cap", opt.degree_cap},
                       {"applies", p.input.rank_one()}};
    }
  } else if (command == "obstruction") {
    auto r = analyze(spec.action, opt);
    out["t"] = to_json(r.reduced.t());
    out["equidimensional"] = to_string(r.equidimensional.verdict);
    out["obstruction"] = r.equidimensional.obstruction ? to_json(*r.equidimensional.obstruction) : Json();
    if (!r.equidimensional.obstruction) out["reason"] = r.equidimensional.reason;
  } else if (command == "equidim") {
    if (args.oracle_only) {
      auto p = prepare(spec);
      out["oracle"] = to_json(null_fiber_dimension(p.model.ring(), p.model.invariants()));
      out["oracle_input"] = to_json(null_fiber_dimension(p.input.ring(), p.input.invariants()));
      out["divisor_model"] = model_name(p.model_is_input);
    } else {
      auto r = analyze(spec.action, opt);
      out = equidim_json(r.equidimensional);
      out["divisor_model"] = model_name(r.stability.was_stable && !r.identity_component_used);
    }
  } else if (command == "cofree") {
    PipelineOptions o = opt;
    if (args.degree_cap) {
      if (*args.degree_cap < 0) throw InputError("--degree-cap must be nonnegative", "--degree-cap");
      o.degree_cap = *args.degree_cap;
    }
    auto p = prepare(spec);
    out = to_json(decide_cofree(p.input, o));
  } else if (command == "sweep") {
    int bound = args.bound.value_or(opt.sweep_bound);
    if (bound < 0) throw InputError("--bound must be nonnegative", "--bound");
    auto p = prepare(spec);
    auto q = qualified_lattice(p.model, pseudo_reflection_group(p.model, false));
    auto rc = reduced_class_groups(p.model, q, bound, opt.workers);
    out["divisor_model"] = model_name(p.model_is_input);
    out["lambda_basis"] = to_json(q.basis());
    out["urcl"] = to_json(rc.urcl);
    out["cltilde"] = to_json(rc.cltilde);
    out["stable"] = rc.stable;
    Json entries = Json::array();
    for (const auto& e : rc.entries)
      entries.push_back({{"chi", to_json(e.chi)},
                         {"level", e.level},
                         {"divisor_order", to_json(e.divisor_order)},
                         {"module_order", to_json(e.module_order)}});
    out["entries"] = std::move(entries);
  } else {
    throw InputError("unknown command \"" + command + "\"", "");
  }
  out["command"] = command;
  return out;
}

std::string render(Json report, bool pretty, std::optional<double> timing_ms) {
  if (timing_ms) report["timing"] = {{"elapsed_ms", *timing_ms}};
  return report.dump(pretty ? 2 : -1) + "\n";
}

}  // namespace equidim::cli
