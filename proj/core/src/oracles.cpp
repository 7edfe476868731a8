#include "equidim/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "equidim/errors.hpp"

namespace equidim {

const char* to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    case TriState::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxFaceCoordinates = 20;

std::vector<std::size_t> bits(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) out.push_back(i);
  return out;
}

bool vanishes_on(const Point& g, std::uint32_t mask) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if ((mask >> i & 1u) && g[i] != 0) return false;
  return true;
}

void check_face_cap(std::size_t n) {
  if (n > kMaxFaceCoordinates) throw ResourceCapError("face enumeration limited to 20 coordinates");
}

}  // namespace

FaceLatticeSlice face_lattice(const AffineSemigroup& s) {
  const std::size_t n = s.ambient_dim();
  check_face_cap(n);
  const auto& hb = s.hilbert_basis();
  std::map<std::uint32_t, std::size_t> faces;  // closed zero mask -> rank
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<IntVector> on;
    std::uint32_t closure = (1u << n) - 1;
    for (const auto& h : hb)
      if (vanishes_on(h, mask)) {
        on.push_back(to_integers(h));
        for (std::size_t i = 0; i < n; ++i)
          if (h[i] != 0) closure &= ~(1u << i);
      }
    faces.emplace(closure, rank_of(on, n));
  }
  FaceLatticeSlice out;
  for (const auto& [mask, r] : faces) {
    out.zero_sets.push_back(bits(mask, n));
    out.ranks.push_back(r);
  }
  return out;
}

NullFiberResult null_fiber_dimension(const AffineSemigroup& s_x, const AffineSemigroup& s_g) {
  const std::size_t n = s_x.ambient_dim();
  check_face_cap(n);
  NullFiberResult out;
  out.expected = s_x.rank() - s_g.rank();
  bool any = false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool meets = std::any_of(s_g.hilbert_basis().begin(), s_g.hilbert_basis().end(),
                             [&](const Point& g) { return vanishes_on(g, mask); });
    if (meets) continue;
    std::vector<IntVector> on;
    for (const auto& h : s_x.hilbert_basis())
      if (vanishes_on(h, mask)) on.push_back(to_integers(h));
    std::size_t r = rank_of(on, n);
    if (!any || r > out.dimension) {
      out.dimension = r;
      out.witness = bits(mask, n);
      any = true;
    }
  }
  return out;
}

BoundedFreeness bounded_freeness_oracle(const AffineSemigroup& s_x, const WeightedAction& action,
                                        const Character& chi, int d, const ResourceCaps& caps) {
  BoundedFreeness out;
  auto fiber = enumerate_fiber(s_x, action, chi, d, caps);
  if (fiber.empty()) return out;
  out.generator = fiber.front();
  for (const auto& b : fiber)
    if (!dominates(b, *out.generator)) {
      out.counterexample = b;
      out.verdict = TriState::no;
      return out;
    }
  out.verdict = TriState::yes;
  return out;
}

Order brute_force_class_order(const ClassGroupData& cl, const IntVector& d, long bound) {
  for (long m = 1; m <= bound; ++m)
    if (solve_diophantine(cl.presentation(), Integer(m) * d)) return Integer(m);
  return std::nullopt;
}

BoundedCofreeness bounded_cofreeness_oracle(const AffineSemigroup& s_x, const AffineSemigroup& s_g,
                                            const WeightedAction& action, int d, const ResourceCaps& caps) {
  BoundedCofreeness out;
  out.degree_cap = d;
  const auto& inv = s_g.hilbert_basis();
  std::map<Character, std::vector<Point>> by_weight;
  for (const auto& x : enumerate_orthant_coset(IntVector(s_x.ambient_dim()), s_x.defining_lattice(), d, caps)) {
    if (std::any_of(inv.begin(), inv.end(), [&](const Point& g) { return dominates(x, g); })) continue;
    ++out.module_basis_size;
    by_weight[weight_of(action, x)].push_back(x);
  }
  // Two basis elements of one weight obstruct freeness only when they differ
  // by an invariant Laurent monomial; otherwise they span a rank-two summand.
  const auto& zg = s_g.group();
  for (const auto& [chi, pts] : by_weight) {
    std::optional<std::pair<Point, Point>> pair;
    for (std::size_t i = 0; i < pts.size() && !pair; ++i)
      for (std::size_t j = i + 1; j < pts.size() && !pair; ++j)
        if (zg.contains(to_integers(pts[j]) - to_integers(pts[i]))) pair.emplace(pts[i], pts[j]);
    if (!pair) continue;
    out.colliding_characters.push_back(chi);
    if (out.witness.empty() || degree(pair->second) < degree(out.witness[1])) {
      out.witness_character = chi;
      out.witness = {pair->first, pair->second};
    }
  }
  out.verdict = out.colliding_characters.empty() ? TriState::yes : TriState::no;
  return out;
}

}  // namespace equidim
