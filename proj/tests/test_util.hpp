#pragma once

#include <random>
#include <vector>

#include "wtreelab/ideal.hpp"
#include "wtreelab/rng.hpp"
#include "wtreelab/weighted_tree.hpp"

namespace wtreelab::testutil {

inline Monomial mono(std::vector<Exponent> exps) { return Monomial(std::move(exps)); }

inline MonomialIdeal ideal_of(std::vector<std::vector<Exponent>> gens, int n) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.push_back(Monomial(std::move(g)));
  return MonomialIdeal::minimalize(std::move(ms), n);
}

/// Membership-based double inclusion; independent of canonical forms.
inline bool equal_by_membership(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.is_unit() || b.is_unit()) return a.is_unit() == b.is_unit();
  for (const Monomial& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  for (const Monomial& g : b.generators()) {
    if (!a.contains(g)) return false;
  }
  return true;
}

/// Path x1 - x2 - x3 - x4 with weights 6, 5, 5.
inline WeightedTree example47() {
  return WeightedTree({"x1", "x2", "x3", "x4"}, {{0, 1, 6}, {1, 2, 5}, {2, 3, 5}});
}

inline WeightedTree unit_path(int n) {
  std::vector<std::string> names;
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return WeightedTree(std::move(names), std::move(edges));
}

/// Star with center c and leaf weights 1, 2, 3.
inline WeightedTree star123() {
  return WeightedTree({"c", "l1", "l2", "l3"}, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}});
}

inline WeightedTree strict_path123() {
  return WeightedTree({"x1", "x2", "x3", "x4"}, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}});
}

inline WeightedTree single_edge(Weight w) {
  return WeightedTree({"x1", "x2"}, {{0, 1, w}});
}

/// Proper nonzero random ideal: up to max_gens random monomials, minimalized.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, int max_dim, int max_gens, Exponent max_exp) {
  int n = static_cast<int>(uniform_int(rng, 1, max_dim));
  int k = static_cast<int>(uniform_int(rng, 1, max_gens));
  std::vector<Monomial> gens;
  while (static_cast<int>(gens.size()) < k) {
    std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
    for (auto& x : e) x = uniform_int(rng, 0, max_exp);
    Monomial m{e};
    if (!m.is_one()) gens.push_back(std::move(m));
  }
  return MonomialIdeal::minimalize(std::move(gens), n);
}

}  // namespace wtreelab::testutil
