#include "equidim/divisors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "equidim/errors.hpp"

namespace equidim {

const char* to_string(FacetTier t) {
  switch (t) {
    case FacetTier::ht0: return "ht0";
    case FacetTier::ht1: return "ht1";
    case FacetTier::ht2plus: return "ht2plus";
  }
  return "?";
}

std::vector<std::size_t> FacetClassification::of_tier(FacetTier t) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (facets[i].tier == t) out.push_back(i);
  return out;
}

bool DivisorVector::is_effective() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& x) { return x >= 0; });
}

FacetClassification classify_facets(const AffineSemigroup& s_x, const AffineSemigroup& s_g) {
  FacetClassification cls;
  const auto& hb = s_g.hilbert_basis();
  const std::size_t n = s_x.ambient_dim();
  cls.fibers.resize(s_g.facets().size());
  for (const auto& p : s_x.facets()) {
    FacetClass fc;
    std::set<Point> zero_set;
    std::vector<IntVector> zv;
    std::int64_t e = 0;
    for (const auto& g : hb) {
      if (g[p.coordinate] % p.scale != 0) throw InvariantViolation("facet functional not integral on S_G");
      std::int64_t v = p.value(g);
      e = std::gcd(e, v);
      if (v == 0) {
        zero_set.insert(g);
        zv.push_back(to_integers(g));
      }
    }
    if (e == 0) {
      fc.tier = FacetTier::ht0;
    } else if (rank_of(zv, n) + 1 == s_g.rank()) {
      fc.tier = FacetTier::ht1;
      fc.e = e;
      bool found = false;
      for (const auto& q : s_g.facets()) {
        std::set<Point> face(q.face_generators.begin(), q.face_generators.end());
        if (face != zero_set) continue;
        fc.q = q.id;
        found = true;
        for (const auto& g : hb)
          if (p.value(g) != e * q.value(g)) throw InvariantViolation("ramification: u_P is not e * v_q on S_G");
        break;
      }
      if (!found) throw InvariantViolation("ht1 facet lies over no facet of S_G");
      cls.fibers[fc.q].push_back(p.id);
    } else {
      fc.tier = FacetTier::ht2plus;
    }
    cls.facets.push_back(fc);
  }
  return cls;
}

// ---------------------------------------------------------------- class groups

ClassGroupData::ClassGroupData(const AffineSemigroup& s) {
  const auto& facets = s.facets();
  const auto& basis = s.group().basis();
  presentation_ = IntMatrix(facets.size(), basis.size());
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) presentation_(i, j) = facets[i].value(basis[j]);
  group_ = FgAbGroup(facets.size(), presentation_);
}

IntVector ClassGroupData::prime_divisor(std::size_t facet) const {
  IntVector d(presentation_.rows());
  d.at(facet) = 1;
  return d;
}

ClassGroupData class_group(const AffineSemigroup& s) { return ClassGroupData(s); }

DivisorVector contraction_divisor(const FacetClassification& cls, const IntVector& j) {
  DivisorVector d{DivisorTarget::invariants, IntVector(cls.fibers.size())};
  for (std::size_t q = 0; q < cls.fibers.size(); ++q) {
    if (cls.fibers[q].empty()) throw InvariantViolation("facet of S_G with empty fiber X_q");
    std::optional<Integer> best;
    for (std::size_t p : cls.fibers[q]) {
      Integer c = ceil_div(j[p], Integer(static_cast<long>(cls.facets[p].e)));
      if (!best || c > *best) best = c;
    }
    d.coeffs[q] = *best;
  }
  return d;
}

// ---------------------------------------------------------------- model

ActionModel::ActionModel(WeightedAction action, AffineSemigroup s_x, const ResourceCaps& caps)
    : action_(std::move(action)), caps_(caps), s_x_(std::move(s_x)) {
  s_g_ = invariant_semigroup(s_x_, action_, caps_);
  cls_ = classify_facets(s_x_, s_g_);
  for (std::size_t q = 0; q < cls_.fibers.size(); ++q)
    if (cls_.fibers[q].empty()) throw InvariantViolation("facet of S_G with empty fiber X_q");
  cl_x_ = ClassGroupData(s_x_);
  cl_g_ = ClassGroupData(s_g_);
}

const std::vector<Point>& ActionModel::generators(const Character& chi) const {
  Character key = action_.group.reduce(chi);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->fibers.find(key);
    if (it != cache_->fibers.end()) return it->second;
  }
  auto gens = fiber_generators(s_x_, action_, key, caps_);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->fibers.emplace(std::move(key), std::move(gens)).first->second;
}

namespace {

const std::vector<Point>& realized_generators(const ActionModel& m, const Character& chi) {
  const auto& gens = m.generators(chi);
  if (gens.empty()) throw CharacterNotRealized("character is not realized on the semigroup");
  return gens;
}

// A fiber element different from gens.front().
Point second_sample(const ActionModel& m, const std::vector<Point>& gens) {
  if (gens.size() > 1) return gens[1];
  Point a = gens.front();
  if (!m.invariants().hilbert_basis().empty()) {
    const Point& g = m.invariants().hilbert_basis().front();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += g[i];
  }
  return a;
}

}  // namespace

DivisorVector minimal_effective_divisor_at(const ActionModel& m, const Point& a) {
  const auto& cls = m.classification();
  const auto& facets = m.ring().facets();
  DivisorVector d{DivisorTarget::ring, IntVector(facets.size())};
  for (std::size_t p = 0; p < facets.size(); ++p)
    if (cls.facets[p].tier == FacetTier::ht0) d.coeffs[p] = facets[p].value(a);
  for (const auto& fiber : cls.fibers) {
    std::optional<std::int64_t> low;
    for (std::size_t p : fiber) {
      std::int64_t v = facets[p].value(a) / cls.facets[p].e;  // values are nonnegative
      if (!low || v < *low) low = v;
    }
    for (std::size_t p : fiber) d.coeffs[p] = facets[p].value(a) - *low * cls.facets[p].e;
  }
  return d;
}

DivisorVector module_divisor_at(const ActionModel& m, const Point& a) {
  IntVector neg;
  for (const auto& v : m.ring().valuations(a)) neg.push_back(-v);
  return contraction_divisor(m.classification(), neg);
}

DivisorVector minimal_effective_divisor(const ActionModel& m, const Character& chi) {
  const auto& gens = realized_generators(m, chi);
  DivisorVector d = minimal_effective_divisor_at(m, gens.front());
  if (minimal_effective_divisor_at(m, second_sample(m, gens)) != d)
    throw InvariantViolation("D(chi) depends on the fiber element");
  return d;
}

IntVector module_class(const ActionModel& m, const Character& chi) {
  const auto& gens = realized_generators(m, chi);
  IntVector c = m.cl_invariants().class_of(module_divisor_at(m, gens.front()).coeffs);
  if (m.cl_invariants().class_of(module_divisor_at(m, second_sample(m, gens)).coeffs) != c)
    throw InvariantViolation("[R_chi] depends on the fiber element");
  return c;
}

Order module_class_order(const ActionModel& m, const Character& chi) {
  const auto& gens = realized_generators(m, chi);
  return m.cl_invariants().order_of(module_divisor_at(m, gens.front()).coeffs);
}

namespace {

// For every q some P over q has u_P(a) < e(P,q).
bool below_ramification(const ActionModel& m, const Point& a) {
  const auto& cls = m.classification();
  const auto& facets = m.ring().facets();
  for (const auto& fiber : cls.fibers) {
    bool hit = std::any_of(fiber.begin(), fiber.end(),
                           [&](std::size_t p) { return facets[p].value(a) < cls.facets[p].e; });
    if (!hit) return false;
  }
  return true;
}

// Is there a fiber element whose valuations equal D(chi) at all ht0 and ht1 facets?
bool exact_match_feasible(const ActionModel& m, const Character& chi, const DivisorVector& d) {
  auto coset = fiber_coset(m.ring(), m.action(), chi);
  if (!coset) return false;
  const auto& facets = m.ring().facets();
  const auto& cls = m.classification();
  std::vector<std::size_t> fixed;
  for (std::size_t p = 0; p < facets.size(); ++p)
    if (cls.facets[p].tier != FacetTier::ht2plus) fixed.push_back(p);
  const Sublattice& lg = coset->lattice;
  const std::size_t n = m.ring().ambient_dim(), k = lg.rank();
  IntMatrix rows(fixed.size(), k);
  IntVector rhs(fixed.size());
  for (std::size_t r = 0; r < fixed.size(); ++r) {
    const auto& p = facets[fixed[r]];
    for (std::size_t j = 0; j < k; ++j) rows(r, j) = lg.basis()[j][p.coordinate];
    rhs[r] = Integer(static_cast<long>(p.scale)) * d.coeffs[fixed[r]] - coset->offset[p.coordinate];
  }
  IntVector offset = coset->offset;
  Sublattice lattice = lg;
  if (!fixed.empty()) {
    auto sol = solve_diophantine(rows, rhs);
    if (!sol) return false;
    offset = offset + lg.basis_matrix() * sol->particular;
    lattice = image(lg.basis_matrix(), sol->kernel);
  }
  (void)n;
  return !orthant_coset_minima(offset, lattice, m.caps()).empty();
}

}  // namespace

FreenessResult stanley_free_test(const ActionModel& m, const Character& chi) {
  const auto& gens = realized_generators(m, chi);
  FreenessResult r;
  r.witness = gens.front();
  bool path_a = false;
  for (const auto& h : gens)
    if (below_ramification(m, h)) {
      path_a = true;
      r.witness = h;
      break;
    }
  bool path_b = exact_match_feasible(m, chi, minimal_effective_divisor(m, chi));
  bool single = gens.size() == 1;
  if (path_a != path_b || path_a != single)
    throw InvariantViolation("freeness paths disagree (criterion " + std::to_string(path_a) + ", exact match " +
                             std::to_string(path_b) + ", generators " + std::to_string(gens.size()) + ")");
  r.free = path_a;
  if (!r.free) r.second = gens[1];
  return r;
}

FreenessResult module_free_test(const ActionModel& m, const Character& chi) {
  if (m.rank_one()) return stanley_free_test(m, chi);
  const auto& gens = realized_generators(m, chi);
  const auto& zg = m.invariants().group();
  FreenessResult r;
  r.witness = gens.front();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (zg.contains(to_integers(gens[j]) - to_integers(gens[i]))) {
        r.witness = gens[i];
        r.second = gens[j];
        return r;
      }
  r.free = true;
  return r;
}

FreeMultiple min_free_multiple(const ActionModel& m, const Character& chi) {
  FreeMultiple out;
  out.divisor_order = m.cl_ring().order_of(minimal_effective_divisor(m, chi).coeffs);
  module_class(m, chi);  // independence check
  out.module_order = module_class_order(m, chi);
  if (out.module_order && out.divisor_order != out.module_order)
    throw InvariantViolation("ord[D(chi)] = " + to_string(out.divisor_order) + " but ord[R_chi] = " +
                             to_string(out.module_order));
  out.value = out.module_order;
  if (out.value && *out.value <= 64) {
    const long q_max = out.value->get_si();
    for (long q = 1; q <= q_max; ++q) {
      Character qchi = m.action().group.reduce(Integer(q) * chi);
      bool free = stanley_free_test(m, qchi).free;
      if (free != (q == q_max))
        throw InvariantViolation("free multiple of chi disagrees with class order at q = " + std::to_string(q));
    }
  }
  return out;
}

bool no_blowing_up_check(const FacetClassification& cls) { return cls.of_tier(FacetTier::ht2plus).empty(); }

Sublattice e_star_lattice(const FacetClassification& cls) {
  const std::size_t f = cls.facets.size();
  std::vector<IntVector> gens;
  for (const auto& fiber : cls.fibers) {
    IntVector g(f);
    for (std::size_t p : fiber) g[p] = static_cast<long>(cls.facets[p].e);
    gens.push_back(std::move(g));
  }
  for (std::size_t p : cls.of_tier(FacetTier::ht2plus)) {
    IntVector g(f);
    g[p] = 1;
    gens.push_back(std::move(g));
  }
  return Sublattice(f, std::move(gens));
}

}  // namespace equidim
