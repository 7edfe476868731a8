#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "equidim/divisors.hpp"
#include "equidim/orthant.hpp"
#include "equidim/semigroup.hpp"

namespace equidim::testing {

inline WeightedAction make_action(std::size_t free_rank, std::vector<long> torsion,
                                  std::vector<std::vector<long>> weights,
                                  std::vector<std::pair<std::vector<long>, long>> congruences = {}) {
  WeightedAction a;
  a.ambient_dim = weights.size();
  a.group.free_rank = free_rank;
  for (long m : torsion) a.group.torsion.emplace_back(m);
  for (const auto& w : weights) a.weights.push_back(to_integers(w));
  for (const auto& [c, m] : congruences) a.congruences.push_back({to_integers(c), Integer(m)});
  a.normalize();
  return a;
}

// V = K^4 with weights (1,0),(-1,0),(0,1),(0,-1), X = V // <tau>.
inline WeightedAction example_5_7() {
  return make_action(2, {}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{{1, 1, -1, -1}, 3}});
}

// Torus quotient a1 + a2 + a3 = 3 a4; second torus coordinate acts by (1,-1,0,0).
inline WeightedAction example_5_8() {
  return make_action(2, {}, {{1, 1}, {1, -1}, {1, 0}, {-3, 0}}, {{{1, 1, 1, -3}, 0}});
}

inline WeightedAction polynomial_ring() { return make_action(1, {}, {{1}, {-1}, {0}}); }

inline WeightedAction scaling_torus() { return make_action(1, {}, {{1}}); }

inline WeightedAction trivial_group() { return make_action(0, {}, {{}, {}, {}}); }

inline std::vector<WeightedAction> fixtures() {
  return {example_5_7(), example_5_8(), polynomial_ring(), scaling_torus()};
}

inline ActionModel model(const WeightedAction& a) { return ActionModel(a, build_semigroup(a)); }

// Weights of fixture-sized fiber elements: every character met by a point of degree <= d.
inline std::vector<Character> small_characters(const ActionModel& m, int d) {
  std::set<Character> out;
  for (const auto& x : enumerate_orthant_coset(IntVector(m.ring().ambient_dim()), m.ring().defining_lattice(), d, {}))
    out.insert(weight_of(m.action(), x));
  return {out.begin(), out.end()};
}

inline std::vector<Point> sorted(std::vector<Point> v) {
  sort_graded(v);
  return v;
}

// Minimal nonzero elements of L ∩ orthant among all points of degree <= d.
inline std::vector<Point> brute_hilbert_basis(const Sublattice& l, int d) {
  ResourceCaps caps;
  caps.max_candidates = 50'000'000;
  auto pts = enumerate_orthant_coset(IntVector(l.ambient_rank()), l, d, caps);
  std::vector<Point> hb;
  for (const auto& x : pts) {
    if (degree(x) == 0) continue;
    if (std::none_of(hb.begin(), hb.end(), [&](const Point& h) { return dominates(x, h); })) hb.push_back(x);
  }
  return hb;
}

inline IntVector ints(std::initializer_list<long> v) { return to_integers(std::vector<long>(v)); }

// Random action with n <= 5, weights in [-3,3], torsion moduli in {2,3}.
inline WeightedAction random_action(std::mt19937_64& rng, std::size_t max_n = 5, bool with_congruence = true) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::size_t n = static_cast<std::size_t>(pick(1, static_cast<long>(max_n)));
  std::size_t r = static_cast<std::size_t>(pick(0, 2));
  std::vector<long> torsion;
  if (pick(0, 2) == 0) torsion.push_back(pick(2, 3));
  std::vector<std::vector<long>> weights(n);
  for (auto& w : weights) {
    for (std::size_t k = 0; k < r; ++k) w.push_back(pick(-3, 3));
    for (long m : torsion) w.push_back(pick(0, m - 1));
  }
  std::vector<std::pair<std::vector<long>, long>> cong;
  if (with_congruence && pick(0, 2) == 0) {
    std::vector<long> c(n);
    for (auto& x : c) x = pick(-2, 2);
    cong.push_back({c, pick(2, 3)});
  }
  return make_action(r, torsion, weights, cong);
}

}  // namespace equidim::testing
