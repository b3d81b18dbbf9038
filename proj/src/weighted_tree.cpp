#include "wtreelab/weighted_tree.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "wtreelab/rng.hpp"

namespace wtreelab {

namespace {

// Parent pointers of a BFS tree rooted at `root`; parent[root] = -1.
// Also fills `order` with vertices in BFS order.
std::vector<int> bfs_parents(const WeightedTree& tree, int root, std::vector<int>* order = nullptr) {
  std::vector<int> parent(static_cast<std::size_t>(tree.size()), -2);
  std::queue<int> q;
  parent[static_cast<std::size_t>(root)] = -1;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (order) order->push_back(v);
    for (auto [u, w] : tree.neighbors(v)) {
      (void)w;
      if (parent[static_cast<std::size_t>(u)] == -2) {
        parent[static_cast<std::size_t>(u)] = v;
        q.push(u);
      }
    }
  }
  return parent;
}

}  // namespace

WeightedTree::WeightedTree(std::vector<std::string> names, std::vector<WeightedEdge> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  int n = static_cast<int>(names_.size());
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  {
    std::set<std::string> seen;
    for (const std::string& name : names_) {
      if (name.empty()) throw std::invalid_argument("empty vertex name");
      if (!seen.insert(name).second) throw std::invalid_argument("duplicate vertex name: " + name);
    }
  }
  for (WeightedEdge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("loop edge at " + names_[static_cast<std::size_t>(e.u)]);
    if (e.w < 1) throw std::invalid_argument("edge weight must be positive");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw std::invalid_argument("duplicate edge " + names_[static_cast<std::size_t>(edges_[i].u)] + "-" +
                                  names_[static_cast<std::size_t>(edges_[i].v)]);
    }
  }
  if (static_cast<int>(edges_.size()) != n - 1) {
    throw std::invalid_argument("a tree on " + std::to_string(n) + " vertices needs " +
                                std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const WeightedEdge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
    adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  // Connected + |E| = |V| - 1 rules out cycles.
  std::vector<int> parent = bfs_parents(*this, 0);
  for (int v = 0; v < n; ++v) {
    if (parent[static_cast<std::size_t>(v)] == -2) {
      throw std::invalid_argument("graph is disconnected at vertex " + names_[static_cast<std::size_t>(v)]);
    }
  }
}

const std::vector<std::pair<int, Weight>>& WeightedTree::neighbors(int v) const {
  return adj_[static_cast<std::size_t>(v)];
}

Weight WeightedTree::weight(int u, int v) const {
  for (auto [x, w] : neighbors(u)) {
    if (x == v) return w;
  }
  throw std::invalid_argument("no edge " + names_[static_cast<std::size_t>(u)] + "-" +
                              names_[static_cast<std::size_t>(v)]);
}

int WeightedTree::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

Weight WeightedTree::max_weight() const {
  Weight d = 0;
  for (const WeightedEdge& e : edges_) d = std::max(d, e.w);
  return d;
}

Weight WeightedTree::weight_sum() const {
  Weight s = 0;
  for (const WeightedEdge& e : edges_) s += e.w;
  return s;
}

int WeightedTree::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  }
  return -1;
}

RootAnalysis analyze_root(const WeightedTree& tree, int root) {
  if (root < 0 || root >= tree.size()) throw std::invalid_argument("unknown root vertex");
  RootAnalysis out;
  out.root = root;
  out.increasing = true;
  out.strictly_increasing = true;
  std::vector<int> parent = bfs_parents(tree, root);
  // Every consecutive weight pair of a leaf-to-root path is some
  // (w(child, v), w(v, parent(v))) with the child off the root side, and
  // conversely each such pair extends to a leaf path. Specialness is the
  // equality case at v.
  for (int v = 0; v < tree.size(); ++v) {
    if (v == root) continue;
    int p = parent[static_cast<std::size_t>(v)];
    Weight up = tree.weight(v, p);
    bool special = false;
    for (auto [w, wv] : tree.neighbors(v)) {
      if (w == p) continue;
      if (wv > up) out.increasing = false;
      if (wv >= up) out.strictly_increasing = false;
      if (wv == up) special = true;
    }
    if (special) {
      out.special_vertices.push_back(v);
      out.special_edges.emplace_back(v, p);
    }
  }
  out.strictly_increasing = out.strictly_increasing && out.increasing;
  out.s = static_cast<int>(out.special_vertices.size());
  return out;
}

std::vector<Weight> mu_values(const WeightedTree& tree) {
  std::vector<Weight> mu(static_cast<std::size_t>(tree.size()), 0);
  for (const WeightedEdge& e : tree.edges()) {
    mu[static_cast<std::size_t>(e.u)] = std::max(mu[static_cast<std::size_t>(e.u)], e.w);
    mu[static_cast<std::size_t>(e.v)] = std::max(mu[static_cast<std::size_t>(e.v)], e.w);
  }
  return mu;
}

std::vector<int> a_set(const WeightedTree& tree) {
  std::vector<Weight> mu = mu_values(tree);
  std::vector<int> result;
  for (int v = 0; v < tree.size(); ++v) {
    std::vector<int> order;
    std::vector<int> parent = bfs_parents(tree, v, &order);
    std::vector<int> dist(static_cast<std::size_t>(tree.size()), 0);
    bool member = false;
    // BFS order guarantees dist[parent] is set before dist[child].
    for (int w : order) {
      if (w == v) continue;
      int p = parent[static_cast<std::size_t>(w)];
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(p)] + 1;
      if (dist[static_cast<std::size_t>(w)] % 2 == 1 && tree.weight(p, w) < mu[static_cast<std::size_t>(w)]) {
        member = true;
        break;
      }
    }
    if (member) result.push_back(v);
  }
  return result;
}

TreeAnalysis analyze(const WeightedTree& tree) {
  TreeAnalysis out;
  out.per_root.reserve(static_cast<std::size_t>(tree.size()));
  for (int v = 0; v < tree.size(); ++v) {
    out.per_root.push_back(analyze_root(tree, v));
    const RootAnalysis& ra = out.per_root.back();
    if (ra.increasing) {
      out.roots.push_back(v);
      if (!out.s_min || ra.s < *out.s_min) out.s_min = ra.s;
      if (ra.strictly_increasing) out.is_strictly_increasing = true;
    }
  }
  out.is_increasing = !out.roots.empty();
  if (!out.is_increasing) out.s_min.reset();
  out.d_max = tree.max_weight();
  out.mu = mu_values(tree);
  out.a_set = a_set(tree);
  std::vector<int> order;
  std::vector<int> parent = bfs_parents(tree, 0, &order);
  std::vector<int> color(static_cast<std::size_t>(tree.size()), 0);
  for (int v : order) {
    if (v == 0) continue;
    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
  }
  for (int v = 0; v < tree.size(); ++v) {
    (color[static_cast<std::size_t>(v)] == 0 ? out.side_u : out.side_v).push_back(v);
  }
  return out;
}

Monomial witness_monomial(const WeightedTree& tree, int root) {
  RootAnalysis ra = analyze_root(tree, root);
  if (!ra.increasing) throw std::invalid_argument("witness monomial requires an increasing root");
  std::vector<Weight> mu = mu_values(tree);
  std::vector<Exponent> e(static_cast<std::size_t>(tree.size()), 0);
  for (int v = 0; v < tree.size(); ++v) e[static_cast<std::size_t>(v)] = mu[static_cast<std::size_t>(v)] - 1;
  for (auto [u, p] : ra.special_edges) {
    Weight w = tree.weight(u, p);
    e[static_cast<std::size_t>(u)] += w;
    e[static_cast<std::size_t>(p)] += w;
  }
  return Monomial(std::move(e));
}

MonomialIdeal edge_ideal(const WeightedTree& tree) {
  std::vector<Monomial> gens;
  gens.reserve(tree.edges().size());
  for (const WeightedEdge& e : tree.edges()) {
    gens.push_back(Monomial::variable(tree.size(), e.u).times(Monomial::variable(tree.size(), e.v)).pow(e.w));
  }
  return MonomialIdeal::minimalize(std::move(gens), tree.size());
}

MonomialIdeal complete_bipartite_ideal(const std::vector<int>& side_u,
                                       const std::vector<int>& side_v, int ring_dim) {
  if (side_u.empty() || side_v.empty()) {
    throw std::invalid_argument("complete bipartite ideal needs two nonempty sides");
  }
  for (int u : side_u) {
    for (int v : side_v) {
      if (u == v) throw std::invalid_argument("bipartition sides overlap");
    }
  }
  std::vector<Monomial> gens;
  gens.reserve(side_u.size() * side_v.size());
  for (int u : side_u) {
    for (int v : side_v) {
      gens.push_back(Monomial::variable(ring_dim, u).times(Monomial::variable(ring_dim, v)));
    }
  }
  return MonomialIdeal::minimalize(std::move(gens), ring_dim);
}

WeightedTree generate_random(TreeKind kind, int n, Weight max_weight, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random tree needs n >= 2");
  if (max_weight < 1) throw std::invalid_argument("max weight must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));

  // Uniform labeled tree via a random Prufer sequence.
  std::vector<std::pair<int, int>> shape;
  if (n == 2) {
    shape.emplace_back(0, 1);
  } else {
    std::vector<int> prufer(static_cast<std::size_t>(n - 2));
    for (int& a : prufer) a = static_cast<int>(uniform_int(rng, 0, n - 1));
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int a : prufer) ++deg[static_cast<std::size_t>(a)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
      if (deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    }
    for (int a : prufer) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      shape.emplace_back(leaf, a);
      if (--deg[static_cast<std::size_t>(a)] == 1) leaves.insert(a);
    }
    int u = *leaves.begin();
    int v = *std::next(leaves.begin());
    shape.emplace_back(u, v);
  }

  int root = static_cast<int>(uniform_int(rng, 0, n - 1));
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : shape) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  {
    std::queue<int> q;
    parent[static_cast<std::size_t>(root)] = -1;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int u : adj[static_cast<std::size_t>(v)]) {
        if (parent[static_cast<std::size_t>(u)] == -2) {
          parent[static_cast<std::size_t>(u)] = v;
          depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(v)] + 1;
          q.push(u);
        }
      }
    }
  }

  bool strict = kind == TreeKind::strictly_increasing;
  if (strict) {
    for (int v = 0; v < n; ++v) {
      if (static_cast<Weight>(depth[static_cast<std::size_t>(v)]) > max_weight) {
        throw std::domain_error("strict weight assignment infeasible: tree depth " +
                                std::to_string(depth[static_cast<std::size_t>(v)]) + " exceeds max weight " +
                                std::to_string(max_weight));
      }
    }
  }

  // Leaves first; each parent edge dominates the child edges below it. Strict
  // draws keep depth(parent) levels of headroom so feasible shapes never fail
  // mid-assignment.
  std::vector<Weight> edge_weight(static_cast<std::size_t>(n), 0);  // weight of (parent[v], v)
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (v == root) continue;
    Weight child_max = 0;
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (u != parent[static_cast<std::size_t>(v)]) child_max = std::max(child_max, edge_weight[static_cast<std::size_t>(u)]);
    }
    Weight lo = strict ? child_max + 1 : std::max<Weight>(child_max, 1);
    Weight hi = strict ? max_weight - static_cast<Weight>(depth[static_cast<std::size_t>(v)]) + 1 : max_weight;
    edge_weight[static_cast<std::size_t>(v)] = uniform_int(rng, lo, hi);
  }

  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int v = 0; v < n; ++v) {
    if (v != root) edges.push_back({parent[static_cast<std::size_t>(v)], v, edge_weight[static_cast<std::size_t>(v)]});
  }
  return WeightedTree(std::move(names), std::move(edges));
}

}  // namespace wtreelab
