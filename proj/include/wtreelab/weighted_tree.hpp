#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wtreelab/ideal.hpp"

namespace wtreelab {

using Weight = std::int64_t;

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Weight w = 1;
  auto operator<=>(const WeightedEdge&) const = default;
};

/// Edge-weighted tree over named vertices. The vertex order is the variable
/// order of every ideal derived from the tree. Immutable once built.
class WeightedTree {
 public:
  /// Validates: unique names, simple edges, positive weights, connected and
  /// acyclic with |E| = |V| - 1.
  WeightedTree(std::vector<std::string> names, std::vector<WeightedEdge> edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  /// Edges normalized to u < v and sorted.
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  const std::vector<std::pair<int, Weight>>& neighbors(int v) const;
  Weight weight(int u, int v) const;
  int degree(int v) const;
  bool is_leaf(int v) const { return degree(v) == 1; }
  /// d = max edge weight (0 for an edgeless tree).
  Weight max_weight() const;
  Weight weight_sum() const;
  int index_of(const std::string& name) const;

  bool operator==(const WeightedTree& other) const {
    return names_ == other.names_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<std::pair<int, Weight>>> adj_;
};

/// Per-root classification. Special vertices are interior path vertices v
/// with some neighbor w off the root side of v realizing
/// w(wv) = w(v, parent); special edges are the directed (v -> parent) pairs.
struct RootAnalysis {
  int root = 0;
  bool increasing = false;
  bool strictly_increasing = false;
  std::vector<int> special_vertices;
  std::vector<std::pair<int, int>> special_edges;
  int s = 0;

  bool operator==(const RootAnalysis&) const = default;
};

struct TreeAnalysis {
  std::vector<RootAnalysis> per_root;  // indexed by vertex
  std::vector<int> roots;              // vertices whose analysis is increasing
  bool is_increasing = false;
  bool is_strictly_increasing = false;
  std::optional<int> s_min;  // defined only when is_increasing
  Weight d_max = 0;
  std::vector<Weight> mu;
  std::vector<int> a_set;
  std::vector<int> side_u;
  std::vector<int> side_v;

  bool operator==(const TreeAnalysis&) const = default;
};

RootAnalysis analyze_root(const WeightedTree& tree, int root);
TreeAnalysis analyze(const WeightedTree& tree);

/// mu(v) = max weight over edges at v.
std::vector<Weight> mu_values(const WeightedTree& tree);

/// Vertices admitting an odd-length path whose last edge weighs strictly
/// less than mu of the far endpoint.
std::vector<int> a_set(const WeightedTree& tree);

/// f(root) = (prod over special edges xy of (xy)^w(xy)) * (prod_v v^(mu(v)-1)).
/// Requires an increasing root.
Monomial witness_monomial(const WeightedTree& tree, int root);

/// One generator (x_u x_v)^w per edge.
MonomialIdeal edge_ideal(const WeightedTree& tree);

/// Generators uv for u in `side_u`, v in `side_v`; sides disjoint, nonempty.
MonomialIdeal complete_bipartite_ideal(const std::vector<int>& side_u,
                                       const std::vector<int>& side_v, int ring_dim);

enum class TreeKind { increasing, strictly_increasing };

/// Random tree with the requested weight class: uniform Prufer shape, random
/// root, weights assigned from the leaves up. Deterministic per seed. Throws
/// std::domain_error when a strict assignment is infeasible (some leaf lies
/// deeper than max_weight below the chosen root).
WeightedTree generate_random(TreeKind kind, int n, Weight max_weight, std::uint64_t seed);

}  // namespace wtreelab
