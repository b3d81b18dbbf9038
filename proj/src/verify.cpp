#include "wtreelab/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>

#include "wtreelab/errors.hpp"
#include "wtreelab/rng.hpp"

namespace wtreelab {

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::holds:
      return "holds";
    case VerdictStatus::counterexample:
      return "counterexample";
    case VerdictStatus::skipped_resource:
      return "skipped_resource";
  }
  return "unknown";
}

std::string describe_tree(const WeightedTree& tree) {
  std::string out = "n=" + std::to_string(tree.size()) + "; edges=";
  const auto& names = tree.names();
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    const WeightedEdge& e = tree.edges()[i];
    if (i > 0) out += ",";
    out += names[static_cast<std::size_t>(e.u)] + "-" + names[static_cast<std::size_t>(e.v)] + ":" +
           std::to_string(e.w);
  }
  return out;
}

namespace {

TreeAnalysis require_increasing(const WeightedTree& tree, const std::string& checker) {
  TreeAnalysis analysis = analyze(tree);
  if (!analysis.is_increasing) {
    throw std::invalid_argument(checker + " requires an increasing weighted tree");
  }
  return analysis;
}

TreeAnalysis require_strict(const WeightedTree& tree, const std::string& checker) {
  TreeAnalysis analysis = analyze(tree);
  if (!analysis.is_strictly_increasing) {
    throw std::invalid_argument(checker + " requires a strictly increasing weighted tree");
  }
  return analysis;
}

Verdict base_verdict(const std::string& claim, const WeightedTree& tree) {
  Verdict v;
  v.claim = claim;
  v.instance = describe_tree(tree);
  return v;
}

void add_equality_witness(Verdict& v, const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  v.status = VerdictStatus::counterexample;
  v.witness.emplace_back("ring_dim", std::to_string(lhs.ring_dim()));
  v.witness.emplace_back("lhs", lhs.str_exponents());
  v.witness.emplace_back("rhs", rhs.str_exponents());
}

Verdict resource_skip(Verdict v, const ResourceError& err) {
  v.status = VerdictStatus::skipped_resource;
  v.detail = err.what();
  return v;
}

// Pendant edge (x, y) with y a leaf and w(xy) minimal among the edges at x;
// the shape the longest-path lemma produces and the colon lemma consumes.
std::optional<std::pair<int, int>> find_pendant_edge(const WeightedTree& tree) {
  for (int y = 0; y < tree.size(); ++y) {
    if (!tree.is_leaf(y)) continue;
    int x = tree.neighbors(y)[0].first;
    Weight wxy = tree.weight(x, y);
    bool minimal = true;
    for (auto [u, w] : tree.neighbors(x)) {
      (void)u;
      if (w < wxy) minimal = false;
    }
    if (minimal) return std::make_pair(x, y);
  }
  return std::nullopt;
}

// Root achieving s_min, tie broken by lexicographically least name.
int chosen_root(const WeightedTree& tree, const TreeAnalysis& analysis) {
  int best = -1;
  for (int r : analysis.roots) {
    if (analysis.per_root[static_cast<std::size_t>(r)].s != *analysis.s_min) continue;
    if (best < 0 || tree.names()[static_cast<std::size_t>(r)] < tree.names()[static_cast<std::size_t>(best)]) {
      best = r;
    }
  }
  return best;
}

MonomialIdeal structure_rhs(const WeightedTree& tree, const TreeAnalysis& analysis) {
  return MonomialIdeal::variable_ideal(analysis.a_set, tree.size())
      .sum(complete_bipartite_ideal(analysis.side_u, analysis.side_v, tree.size()));
}

struct ColonStructure {
  int root = 0;
  int t0 = 1;
  Monomial witness;
  MonomialIdeal lhs;
  MonomialIdeal rhs;
  bool equal = false;
  bool witness_outside_power = false;
};

ColonStructure colon_structure_data(const WeightedTree& tree, const TreeAnalysis& analysis) {
  ColonStructure data{.root = chosen_root(tree, analysis),
                      .t0 = *analysis.s_min + 1,
                      .witness = witness_monomial(tree, chosen_root(tree, analysis)),
                      .lhs = MonomialIdeal::zero(tree.size()),
                      .rhs = MonomialIdeal::zero(tree.size())};
  MonomialIdeal power = edge_ideal(tree).power(data.t0);
  data.lhs = power.colon(data.witness);
  data.rhs = structure_rhs(tree, analysis);
  data.equal = data.lhs == data.rhs;
  data.witness_outside_power = !power.contains(data.witness);
  return data;
}

// Betti-engine depth of K[U1 union V1] / I(K_{U1,V1}) with the sides
// re-indexed into their own ring.
int bipartite_quotient_depth(const std::vector<int>& u1, const std::vector<int>& v1,
                             const FieldSpec& field) {
  int dim = static_cast<int>(u1.size() + v1.size());
  std::vector<int> side_u(u1.size()), side_v(v1.size());
  for (std::size_t i = 0; i < u1.size(); ++i) side_u[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < v1.size(); ++i) side_v[i] = static_cast<int>(u1.size() + i);
  return betti(complete_bipartite_ideal(side_u, side_v, dim), field).depth();
}

std::vector<int> path_between(const WeightedTree& tree, int from, int to) {
  std::vector<int> parent(static_cast<std::size_t>(tree.size()), -2);
  std::queue<int> q;
  parent[static_cast<std::size_t>(from)] = -1;
  q.push(from);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [u, w] : tree.neighbors(v)) {
      (void)w;
      if (parent[static_cast<std::size_t>(u)] == -2) {
        parent[static_cast<std::size_t>(u)] = v;
        q.push(u);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::string path_string(const WeightedTree& tree, const std::vector<int>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += "-";
    out += tree.names()[static_cast<std::size_t>(path[i])];
  }
  return out;
}

}  // namespace

Verdict check_pendant_colon(const WeightedTree& tree, int t_max) {
  TreeAnalysis analysis = require_increasing(tree, "check_pendant_colon");
  (void)analysis;
  Verdict v = base_verdict("pendant_colon", tree);
  if (tree.size() == 2) {
    v.detail = "single edge: no pendant edge satisfies the lemma preconditions, holds vacuously";
    return v;
  }
  auto pendant = find_pendant_edge(tree);
  if (!pendant) {
    v.status = VerdictStatus::counterexample;
    v.detail = "no pendant edge with minimal weight at its interior vertex exists";
    v.witness.emplace_back("tree", describe_tree(tree));
    return v;
  }
  auto [x, y] = *pendant;
  Monomial generator =
      Monomial::variable(tree.size(), x).times(Monomial::variable(tree.size(), y)).pow(tree.weight(x, y));
  MonomialIdeal ideal = edge_ideal(tree);
  int checked = 0;
  try {
    MonomialIdeal previous = ideal;
    for (int t = 2; t <= t_max; ++t) {
      MonomialIdeal current = ideal.power(t);
      MonomialIdeal colon = current.colon(generator);
      if (colon != previous) {
        v.detail = "(I^" + std::to_string(t) + " : g) != I^" + std::to_string(t - 1) +
                   " for pendant generator g = " + generator.str(tree.names());
        add_equality_witness(v, colon, previous);
        return v;
      }
      previous = current;
      ++checked;
    }
  } catch (const ResourceError& err) {
    v = resource_skip(std::move(v), err);
  }
  v.metrics["powers_checked"] = checked;
  if (v.status == VerdictStatus::holds) {
    v.detail = "(I^t : " + generator.str(tree.names()) + ") = I^(t-1) for 2 <= t <= " +
               std::to_string(t_max);
  }
  return v;
}

Verdict check_colon_structure(const WeightedTree& tree) {
  TreeAnalysis analysis = require_increasing(tree, "check_colon_structure");
  Verdict v = base_verdict("colon_structure", tree);
  try {
    ColonStructure data = colon_structure_data(tree, analysis);
    v.metrics["t0"] = data.t0;
    if (!data.equal) {
      v.detail = "(I^t0 : f) differs from (A) + I(K_{U,V}) at root " +
                 tree.names()[static_cast<std::size_t>(data.root)];
      add_equality_witness(v, data.lhs, data.rhs);
      v.witness.emplace_back("f", data.witness.str(tree.names()));
      return v;
    }
    if (data.rhs.is_proper() && !data.witness_outside_power) {
      v.status = VerdictStatus::counterexample;
      v.detail = "witness monomial lies in I^t0 although the colon is proper";
      v.witness.emplace_back("f", data.witness.str(tree.names()));
      return v;
    }
    v.detail = "(I^" + std::to_string(data.t0) + " : f(" +
               tree.names()[static_cast<std::size_t>(data.root)] + ")) = (A) + I(K_{U,V}); f outside I^t0";
  } catch (const ResourceError& err) {
    v = resource_skip(std::move(v), err);
  }
  return v;
}

Verdict check_depth_theorem(const WeightedTree& tree, int extra, const FieldSpec& field) {
  TreeAnalysis analysis = require_increasing(tree, "check_depth_theorem");
  Verdict v = base_verdict("depth_theorem", tree);
  int s = *analysis.s_min;
  int t0 = s + 1;
  MonomialIdeal ideal = edge_ideal(tree);
  v.metrics["s"] = s;

  // Certificate pieces shared by every power: the colon-structure identity at
  // t0 and the additivity decomposition of its right-hand side.
  bool certificate_ready = false;
  bool certificate_skipped = false;
  try {
    ColonStructure data = colon_structure_data(tree, analysis);
    if (!data.equal) {
      v.detail = "colon-structure identity fails at t0 = " + std::to_string(data.t0);
      add_equality_witness(v, data.lhs, data.rhs);
      return v;
    }
    std::set<int> a_members(analysis.a_set.begin(), analysis.a_set.end());
    std::vector<int> u1, v1;
    for (int u : analysis.side_u) {
      if (!a_members.count(u)) u1.push_back(u);
    }
    for (int w : analysis.side_v) {
      if (!a_members.count(w)) v1.push_back(w);
    }
    if (u1.empty() || v1.empty()) {
      v.status = VerdictStatus::counterexample;
      v.detail = "a bipartition side is contained in A(G)";
      v.witness.emplace_back("a_set", path_string(tree, analysis.a_set));
      return v;
    }
    int piece_depth = bipartite_quotient_depth(u1, v1, field);
    int colon_depth = betti(data.lhs, field).depth();
    if (piece_depth != 1 || colon_depth != 1) {
      v.status = VerdictStatus::counterexample;
      v.detail = "additivity decomposition depth is " + std::to_string(piece_depth) +
                 ", colon quotient depth is " + std::to_string(colon_depth) + ", both should be 1";
      v.witness.emplace_back("ring_dim", std::to_string(tree.size()));
      v.witness.emplace_back("colon_ideal", data.lhs.str_exponents());
      return v;
    }
    certificate_ready = true;
  } catch (const ResourceError&) {
    certificate_skipped = true;
  }

  auto pendant = find_pendant_edge(tree);
  std::int64_t oracle_skips = 0;
  std::int64_t certificate_skips = 0;
  std::int64_t powers_total = 0;
  std::int64_t verified_powers = 0;
  for (int t = t0; t <= t0 + extra; ++t) {
    ++powers_total;
    bool oracle_ok = false;
    try {
      int depth = betti(ideal.power(t), field).depth();
      if (depth != 1) {
        v.status = VerdictStatus::counterexample;
        v.detail = "depth(S/I^" + std::to_string(t) + ") = " + std::to_string(depth) + ", expected 1";
        v.witness.emplace_back("ring_dim", std::to_string(tree.size()));
        v.witness.emplace_back("power", ideal.power(t).str_exponents());
        v.witness.emplace_back("computed_depth", std::to_string(depth));
        return v;
      }
      oracle_ok = true;
    } catch (const ResourceError&) {
      ++oracle_skips;
    }

    bool certificate_ok = false;
    if (certificate_skipped) {
      ++certificate_skips;
    } else {
      try {
        if (!depth_at_least_one(ideal.power(t))) {
          v.status = VerdictStatus::counterexample;
          v.detail = "saturation test fails: m is associated to I^" + std::to_string(t);
          v.witness.emplace_back("ring_dim", std::to_string(tree.size()));
          v.witness.emplace_back("power", ideal.power(t).str_exponents());
          return v;
        }
        // Monotonicity chain from t down to the certified power t0.
        bool chain_ok = true;
        if (t > t0) {
          if (!pendant) {
            chain_ok = false;
          } else {
            Monomial generator = Monomial::variable(tree.size(), pendant->first)
                                     .times(Monomial::variable(tree.size(), pendant->second))
                                     .pow(tree.weight(pendant->first, pendant->second));
            for (int step = t0 + 1; step <= t && chain_ok; ++step) {
              MonomialIdeal colon = ideal.power(step).colon(generator);
              if (colon != ideal.power(step - 1)) {
                v.detail = "pendant colon chain fails at t = " + std::to_string(step);
                add_equality_witness(v, colon, ideal.power(step - 1));
                return v;
              }
            }
          }
        }
        certificate_ok = certificate_ready && chain_ok;
        if (!certificate_ok) ++certificate_skips;
      } catch (const ResourceError&) {
        ++certificate_skips;
      }
    }
    if (oracle_ok || certificate_ok) ++verified_powers;
  }
  v.metrics["powers_total"] = powers_total;
  v.metrics["oracle_skips"] = oracle_skips;
  v.metrics["certificate_skips"] = certificate_skips;
  if (verified_powers == 0) {
    v.status = VerdictStatus::skipped_resource;
    v.detail = "all powers exceeded resource caps";
    return v;
  }
  v.detail = "depth(S/I^t) = 1 for t = " + std::to_string(t0) + ".." + std::to_string(t0 + extra);
  if (oracle_skips > 0) v.detail += " (oracle route skipped " + std::to_string(oracle_skips) + " powers)";
  if (certificate_skips > 0) {
    v.detail += " (certificate route skipped " + std::to_string(certificate_skips) + " powers)";
  }
  return v;
}

Verdict check_constant_depth_iff(const WeightedTree& tree, const FieldSpec& field) {
  TreeAnalysis analysis = require_increasing(tree, "check_constant_depth_iff");
  Verdict v = base_verdict("constant_depth_iff", tree);
  MonomialIdeal ideal = edge_ideal(tree);
  try {
    if (analysis.is_strictly_increasing) {
      int horizon = *analysis.s_min + 2;
      for (int t = 1; t <= horizon; ++t) {
        int depth = betti(ideal.power(t), field).depth();
        if (depth != 1) {
          v.status = VerdictStatus::counterexample;
          v.detail = "strictly increasing tree with depth(S/I^" + std::to_string(t) + ") = " +
                     std::to_string(depth);
          v.witness.emplace_back("ring_dim", std::to_string(tree.size()));
          v.witness.emplace_back("power", ideal.power(t).str_exponents());
          return v;
        }
      }
      v.detail = "strictly increasing: depth(S/I^t) = 1 for t = 1.." + std::to_string(horizon);
    } else {
      int depth = betti(ideal, field).depth();
      if (depth < 2) {
        v.status = VerdictStatus::counterexample;
        v.detail = "increasing but not strict, yet depth(S/I) = " + std::to_string(depth) +
                   " so the depth function is constant";
        v.witness.emplace_back("ring_dim", std::to_string(tree.size()));
        v.witness.emplace_back("ideal", ideal.str_exponents());
        return v;
      }
      v.detail = "not strictly increasing: depth(S/I) = " + std::to_string(depth) + " >= 2";
    }
  } catch (const ResourceError& err) {
    v = resource_skip(std::move(v), err);
  }
  return v;
}

Verdict check_depth_monotone(const WeightedTree& tree, int t_max, const FieldSpec& field) {
  require_increasing(tree, "check_depth_monotone");
  Verdict v = base_verdict("depth_monotone", tree);
  DepthProfile profile = depth_profile(tree, t_max, field);
  for (std::size_t i = 1; i < profile.depths.size(); ++i) {
    if (profile.depths[i] > profile.depths[i - 1]) {
      v.status = VerdictStatus::counterexample;
      v.detail = "depth profile increases at t = " + std::to_string(i + 1);
      std::string rendered;
      for (std::size_t k = 0; k < profile.depths.size(); ++k) {
        if (k > 0) rendered += ",";
        rendered += std::to_string(profile.depths[k]);
      }
      v.witness.emplace_back("profile", rendered);
      return v;
    }
  }
  v.metrics["profile_length"] = static_cast<std::int64_t>(profile.depths.size());
  if (profile.truncated) {
    v.status = VerdictStatus::skipped_resource;
    v.detail = "profile truncated after t = " + std::to_string(profile.depths.size()) +
               "; verified prefix is non-increasing";
    return v;
  }
  v.detail = "depth profile non-increasing for t = 1.." + std::to_string(t_max);
  return v;
}

Verdict check_taylor_minimal_and_betti(const WeightedTree& tree, const FieldSpec& field) {
  require_strict(tree, "check_taylor_minimal_and_betti");
  Verdict v = base_verdict("taylor_minimal_and_betti", tree);
  MonomialIdeal ideal = edge_ideal(tree);
  int n = tree.size();
  try {
    if (!taylor_is_minimal(ideal)) {
      v.status = VerdictStatus::counterexample;
      v.detail = "Taylor complex of a strictly increasing tree is not minimal";
      v.witness.emplace_back("ring_dim", std::to_string(n));
      v.witness.emplace_back("ideal", ideal.str_exponents());
      return v;
    }
    std::map<int, std::int64_t> expected;
    std::int64_t binom = 1;
    for (int i = 0; i <= n - 1; ++i) {
      expected[i] = binom;
      binom = binom * (n - 1 - i) / (i + 1);
    }
    for (Engine engine : {Engine::taylor, Engine::koszul}) {
      std::map<int, std::int64_t> total = betti(ideal, field, engine).total();
      if (total != expected) {
        v.status = VerdictStatus::counterexample;
        v.detail = std::string("total Betti numbers differ from binomial(n-1, i) in the ") +
                   (engine == Engine::taylor ? "Taylor" : "Koszul") + " engine";
        v.witness.emplace_back("ring_dim", std::to_string(n));
        v.witness.emplace_back("ideal", ideal.str_exponents());
        return v;
      }
    }
    v.detail = "Taylor minimal; beta_i(S/I) = binomial(" + std::to_string(n - 1) + ", i) in both engines";
  } catch (const ResourceError& err) {
    v = resource_skip(std::move(v), err);
  }
  return v;
}

Verdict check_lcm_degree(const WeightedTree& tree) {
  require_increasing(tree, "check_lcm_degree");
  Verdict v = base_verdict("lcm_degree", tree);
  MonomialIdeal ideal = edge_ideal(tree);
  Exponent expected = tree.max_weight() + tree.weight_sum();
  Exponent actual = lcm_degree(ideal);
  if (actual != expected) {
    v.status = VerdictStatus::counterexample;
    v.detail = "deg lcm(G(I)) = " + std::to_string(actual) + ", expected d + sum w(e) = " +
               std::to_string(expected);
    v.witness.emplace_back("ring_dim", std::to_string(tree.size()));
    v.witness.emplace_back("ideal", ideal.str_exponents());
    return v;
  }
  v.detail = "deg lcm(G(I)) = " + std::to_string(actual) + " = d + sum of weights";
  return v;
}

Verdict check_reg_formula(const WeightedTree& tree, const FieldSpec& field) {
  require_strict(tree, "check_reg_formula");
  Verdict v = base_verdict("reg_formula", tree);
  MonomialIdeal ideal = edge_ideal(tree);
  Exponent expected = tree.max_weight() + (tree.weight_sum() - static_cast<Exponent>(tree.edges().size())) + 1;
  try {
    int actual = betti(ideal, field, Engine::both).reg_ideal();
    if (actual != expected) {
      v.status = VerdictStatus::counterexample;
      v.detail = "reg(I) = " + std::to_string(actual) + ", closed form gives " + std::to_string(expected);
      v.witness.emplace_back("ring_dim", std::to_string(tree.size()));
      v.witness.emplace_back("ideal", ideal.str_exponents());
      return v;
    }
    v.detail = "reg(I) = " + std::to_string(actual) + " = d + sum(w(e)-1) + 1";
  } catch (const ResourceError& err) {
    v = resource_skip(std::move(v), err);
  }
  return v;
}

Verdict check_reg_power(const WeightedTree& tree, int t_max, const FieldSpec& field) {
  require_strict(tree, "check_reg_power");
  Verdict v = base_verdict("reg_power", tree);
  MonomialIdeal ideal = edge_ideal(tree);
  Exponent d = tree.max_weight();
  int checked = 0;
  try {
    int base = betti(ideal, field, Engine::both).reg_ideal();
    for (int t = 2; t <= t_max; ++t) {
      int actual = betti(ideal.power(t), field, Engine::both).reg_ideal();
      Exponent expected = 2 * d * (t - 1) + base;
      if (actual != expected) {
        v.status = VerdictStatus::counterexample;
        v.detail = "reg(I^" + std::to_string(t) + ") = " + std::to_string(actual) + ", expected " +
                   std::to_string(expected);
        v.witness.emplace_back("ring_dim", std::to_string(tree.size()));
        v.witness.emplace_back("power", ideal.power(t).str_exponents());
        return v;
      }
      ++checked;
    }
    v.detail = "reg(I^t) = 2d(t-1) + reg(I) for t = 2.." + std::to_string(t_max);
  } catch (const ResourceError& err) {
    v = resource_skip(std::move(v), err);
  }
  v.metrics["powers_checked"] = checked;
  return v;
}

Verdict check_nonstrict_reg_counterexample(const FieldSpec& field) {
  WeightedTree tree({"x1", "x2", "x3", "x4"}, {{0, 1, 6}, {1, 2, 5}, {2, 3, 5}});
  Verdict v = base_verdict("nonstrict_reg_counterexample", tree);
  MonomialIdeal ideal = edge_ideal(tree);
  try {
    int reg1 = betti(ideal, field, Engine::both).reg_ideal();
    int reg2 = betti(ideal.power(2), field, Engine::both).reg_ideal();
    v.metrics["reg1"] = reg1;
    v.metrics["reg2"] = reg2;
    if (reg1 != 16 || reg2 != 30 || !(reg2 > 2 * 6 + reg1)) {
      v.status = VerdictStatus::counterexample;
      v.detail = "expected reg(I) = 16, reg(I^2) = 30 > 28; computed " + std::to_string(reg1) +
                 " and " + std::to_string(reg2);
      v.witness.emplace_back("ring_dim", "4");
      v.witness.emplace_back("ideal", ideal.str_exponents());
      return v;
    }
    v.detail = "reg(I) = 16, reg(I^2) = 30 > 2d + reg(I) = 28";
  } catch (const ResourceError& err) {
    v = resource_skip(std::move(v), err);
  }
  return v;
}

Verdict check_structure_lemmas(const WeightedTree& tree) {
  TreeAnalysis analysis = require_increasing(tree, "check_structure_lemmas");
  Verdict v = base_verdict("structure_lemmas", tree);
  const auto& names = tree.names();

  std::set<int> side_u(analysis.side_u.begin(), analysis.side_u.end());
  std::set<int> side_v(analysis.side_v.begin(), analysis.side_v.end());
  if (static_cast<int>(side_u.size() + side_v.size()) != tree.size()) {
    v.status = VerdictStatus::counterexample;
    v.detail = "bipartition does not cover the vertex set";
    return v;
  }
  for (const WeightedEdge& e : tree.edges()) {
    bool crosses = (side_u.count(e.u) && side_v.count(e.v)) || (side_u.count(e.v) && side_v.count(e.u));
    if (!crosses) {
      v.status = VerdictStatus::counterexample;
      v.detail = "edge " + names[static_cast<std::size_t>(e.u)] + "-" + names[static_cast<std::size_t>(e.v)] +
                 " does not cross the bipartition";
      return v;
    }
  }

  for (int r : analysis.roots) {
    const RootAnalysis& ra = analysis.per_root[static_cast<std::size_t>(r)];
    if (ra.s != static_cast<int>(ra.special_vertices.size()) ||
        ra.s != static_cast<int>(ra.special_edges.size())) {
      v.status = VerdictStatus::counterexample;
      v.detail = "s(r) != |S(r)| at root " + names[static_cast<std::size_t>(r)];
      v.witness.emplace_back("root", names[static_cast<std::size_t>(r)]);
      return v;
    }
  }

  std::set<int> a_members(analysis.a_set.begin(), analysis.a_set.end());
  auto contained = [&](const std::vector<int>& side) {
    return std::all_of(side.begin(), side.end(), [&](int x) { return a_members.count(x) > 0; });
  };
  if (contained(analysis.side_u) || contained(analysis.side_v)) {
    v.status = VerdictStatus::counterexample;
    v.detail = "a bipartition side is contained in A(G)";
    return v;
  }

  std::vector<Weight> mu = mu_values(tree);
  std::vector<std::set<std::pair<int, int>>> special(static_cast<std::size_t>(tree.size()));
  for (int r : analysis.roots) {
    const RootAnalysis& ra = analysis.per_root[static_cast<std::size_t>(r)];
    special[static_cast<std::size_t>(r)].insert(ra.special_edges.begin(), ra.special_edges.end());
  }

  // Path lemma for members of A: along every shortest odd path realizing
  // membership, the even-position edges are special toward the far end.
  for (int a : analysis.a_set) {
    std::vector<std::vector<int>> shortest;
    std::size_t best = 0;
    for (int w = 0; w < tree.size(); ++w) {
      if (w == a) continue;
      std::vector<int> path = path_between(tree, a, w);
      if (path.size() % 2 != 0) continue;  // odd edge count = even vertex count
      int last_from = path[path.size() - 2];
      if (tree.weight(last_from, w) >= mu[static_cast<std::size_t>(w)]) continue;
      if (shortest.empty() || path.size() < best) {
        shortest.assign(1, path);
        best = path.size();
      } else if (path.size() == best) {
        shortest.push_back(path);
      }
    }
    for (const std::vector<int>& path : shortest) {
      std::size_t m = path.size() / 2;
      for (std::size_t i = 1; i + 1 <= m; ++i) {
        int from = path[2 * i - 1];
        int to = path[2 * i];
        for (int r : analysis.roots) {
          if (!special[static_cast<std::size_t>(r)].count({from, to})) {
            v.status = VerdictStatus::counterexample;
            v.detail = "A-membership path edge " + names[static_cast<std::size_t>(from)] + "->" +
                       names[static_cast<std::size_t>(to)] + " is not special at root " +
                       names[static_cast<std::size_t>(r)];
            v.witness.emplace_back("path", path_string(tree, path));
            v.witness.emplace_back("root", names[static_cast<std::size_t>(r)]);
            return v;
          }
        }
      }
    }
  }

  // Path lemma for pairs outside A: the even-position edges of the unique
  // odd path are special in one orientation.
  for (int u = 0; u < tree.size(); ++u) {
    if (a_members.count(u)) continue;
    for (int w = u + 1; w < tree.size(); ++w) {
      if (a_members.count(w)) continue;
      std::vector<int> path = path_between(tree, u, w);
      if (path.size() % 2 != 0 || path.size() < 4) continue;
      std::size_t m = path.size() / 2;
      for (std::size_t i = 1; i + 1 <= m; ++i) {
        int from = path[2 * i - 1];
        int to = path[2 * i];
        for (int r : analysis.roots) {
          if (!special[static_cast<std::size_t>(r)].count({from, to}) &&
              !special[static_cast<std::size_t>(r)].count({to, from})) {
            v.status = VerdictStatus::counterexample;
            v.detail = "outside-A path edge " + names[static_cast<std::size_t>(from)] + "-" +
                       names[static_cast<std::size_t>(to)] + " is not special at root " +
                       names[static_cast<std::size_t>(r)];
            v.witness.emplace_back("path", path_string(tree, path));
            v.witness.emplace_back("root", names[static_cast<std::size_t>(r)]);
            return v;
          }
        }
      }
    }
  }

  v.detail = "bipartition, s(r) = |S(r)|, A-set coverage and path lemmas all hold";
  return v;
}

namespace {

const std::vector<std::string> kSuiteNames = {"all", "depth", "regularity", "colon", "taylor", "structure"};

bool suite_needs_strict(const std::string& suite) { return suite == "regularity" || suite == "taylor"; }

std::vector<Verdict> run_suite_checkers(const std::string& suite, const WeightedTree& tree,
                                        const FieldSpec& field, int t_max) {
  std::vector<Verdict> out;
  if (suite == "depth") {
    out.push_back(check_depth_theorem(tree, 1, field));
    out.push_back(check_constant_depth_iff(tree, field));
    out.push_back(check_depth_monotone(tree, t_max, field));
  } else if (suite == "colon") {
    out.push_back(check_pendant_colon(tree, t_max));
    out.push_back(check_colon_structure(tree));
  } else if (suite == "structure") {
    out.push_back(check_structure_lemmas(tree));
    out.push_back(check_lcm_degree(tree));
  } else if (suite == "taylor") {
    out.push_back(check_taylor_minimal_and_betti(tree, field));
  } else if (suite == "regularity") {
    out.push_back(check_reg_formula(tree, field));
    out.push_back(check_reg_power(tree, std::max(2, t_max), field));
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return out;
}

void aggregate(Campaign& campaign) {
  campaign.holds = campaign.counterexamples = campaign.skips = 0;
  for (const Verdict& v : campaign.verdicts) {
    switch (v.status) {
      case VerdictStatus::holds:
        ++campaign.holds;
        break;
      case VerdictStatus::counterexample:
        ++campaign.counterexamples;
        break;
      case VerdictStatus::skipped_resource:
        ++campaign.skips;
        break;
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() { return kSuiteNames; }

Campaign run_campaign(const std::string& suite, const CampaignParams& params, const FieldSpec& field) {
  if (std::find(kSuiteNames.begin(), kSuiteNames.end(), suite) == kSuiteNames.end()) {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  Campaign campaign;
  campaign.suite = suite;
  campaign.params = params;
  if (suite == "all") {
    for (const std::string& sub : kSuiteNames) {
      if (sub == "all") continue;
      Campaign part = run_campaign(sub, params, field);
      campaign.instances += part.instances;
      for (Verdict& v : part.verdicts) campaign.verdicts.push_back(std::move(v));
    }
    aggregate(campaign);
    return campaign;
  }

  TreeKind kind = suite_needs_strict(suite) ? TreeKind::strictly_increasing : TreeKind::increasing;
  std::mt19937_64 master(params.seed);
  for (int i = 0; i < params.count; ++i) {
    int n = static_cast<int>(uniform_int(master, params.n_min, params.n_max));
    Weight bound = params.max_weight == 0 ? static_cast<Weight>(n) : params.max_weight;
    std::optional<WeightedTree> tree;
    std::uint64_t used_seed = 0;
    for (int attempt = 0; attempt < 64 && !tree; ++attempt) {
      used_seed = master();
      try {
        tree.emplace(generate_random(kind, n, bound, used_seed));
      } catch (const std::domain_error&) {
        // infeasible strict shape at this weight bound; redraw
      }
    }
    ++campaign.instances;
    if (!tree) {
      Verdict v;
      v.claim = suite;
      v.instance = "instance " + std::to_string(i) + ": generation infeasible (n=" + std::to_string(n) +
                   ", W=" + std::to_string(bound) + ")";
      v.status = VerdictStatus::skipped_resource;
      campaign.verdicts.push_back(std::move(v));
      continue;
    }
    std::string tag = "seed=" + std::to_string(used_seed) + "; " + describe_tree(*tree);
    for (Verdict& v : run_suite_checkers(suite, *tree, field, params.t_max)) {
      v.instance = tag;
      campaign.verdicts.push_back(std::move(v));
    }
  }
  aggregate(campaign);
  return campaign;
}

Campaign run_suite_on(const std::string& suite, const WeightedTree& tree, const FieldSpec& field,
                      int t_max) {
  if (std::find(kSuiteNames.begin(), kSuiteNames.end(), suite) == kSuiteNames.end()) {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  TreeAnalysis analysis = analyze(tree);
  if (!analysis.is_increasing) {
    throw std::invalid_argument("verification requires an increasing weighted tree");
  }
  Campaign campaign;
  campaign.suite = suite;
  campaign.params.count = 1;
  campaign.instances = 1;
  std::vector<std::string> suites_to_run;
  if (suite == "all") {
    for (const std::string& sub : kSuiteNames) {
      if (sub == "all") continue;
      if (suite_needs_strict(sub) && !analysis.is_strictly_increasing) continue;
      suites_to_run.push_back(sub);
    }
  } else {
    if (suite_needs_strict(suite) && !analysis.is_strictly_increasing) {
      throw std::invalid_argument("suite '" + suite + "' requires a strictly increasing weighted tree");
    }
    suites_to_run.push_back(suite);
  }
  for (const std::string& sub : suites_to_run) {
    for (Verdict& v : run_suite_checkers(sub, tree, field, t_max)) {
      campaign.verdicts.push_back(std::move(v));
    }
  }
  aggregate(campaign);
  return campaign;
}

MonomialIdeal parse_exponent_ideal(const std::string& text, int ring_dim) {
  if (text == "unit") return MonomialIdeal::whole_ring(ring_dim);
  if (text == "zero") return MonomialIdeal::zero(ring_dim);
  std::vector<Monomial> gens;
  std::size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) {
      throw std::invalid_argument("malformed ideal witness: " + text);
    }
    ++pos;
  };
  expect('[');
  while (pos < text.size() && text[pos] != ']') {
    expect('[');
    std::vector<Exponent> exps;
    while (pos < text.size() && text[pos] != ']') {
      std::size_t used = 0;
      Exponent e = std::stoll(text.substr(pos), &used);
      pos += used;
      exps.push_back(e);
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    expect(']');
    if (static_cast<int>(exps.size()) != ring_dim) {
      throw std::invalid_argument("witness exponent vector has wrong length");
    }
    gens.push_back(Monomial(std::move(exps)));
    if (pos < text.size() && text[pos] == ',') ++pos;
  }
  expect(']');
  return MonomialIdeal::minimalize(std::move(gens), ring_dim);
}

bool recheck_equality_witness(const Verdict& verdict) {
  std::string lhs, rhs, dim;
  for (const auto& [key, value] : verdict.witness) {
    if (key == "lhs") lhs = value;
    if (key == "rhs") rhs = value;
    if (key == "ring_dim") dim = value;
  }
  if (lhs.empty() || rhs.empty() || dim.empty()) return false;
  int n = std::stoi(dim);
  return parse_exponent_ideal(lhs, n) != parse_exponent_ideal(rhs, n);
}

}  // namespace wtreelab
