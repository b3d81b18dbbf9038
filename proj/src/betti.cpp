#include "wtreelab/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "wtreelab/errors.hpp"
#include "wtreelab/linalg.hpp"
#include "wtreelab/parallel.hpp"

namespace wtreelab {

int worker_count() {
  static const int count = [] {
    if (const char* env = std::getenv("WTREELAB_THREADS")) {
      int parsed = std::atoi(env);
      if (parsed >= 1) return std::min(parsed, 16);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 16u));
  }();
  return count;
}

int BettiTable::pd() const {
  int p = 0;
  for (const auto& [key, rank] : entries) p = std::max(p, key.first);
  return p;
}

int BettiTable::depth() const { return ring_dim - pd(); }

int BettiTable::reg_quotient() const {
  int reg = 0;
  for (const auto& [key, rank] : entries) {
    Exponent deg = 0;
    for (Exponent e : key.second) deg += e;
    reg = std::max(reg, static_cast<int>(deg) - key.first);
  }
  return reg;
}

std::map<int, std::int64_t> BettiTable::total() const {
  std::map<int, std::int64_t> sums;
  for (const auto& [key, rank] : entries) sums[key.first] += rank;
  return sums;
}

namespace {

using Multidegree = std::vector<Exponent>;
using Entries = std::map<std::pair<int, Multidegree>, std::int64_t>;

// Homology ranks of one multidegree strand: `levels` maps homological index
// to its basis labels, `boundary` gives the signed matrix between adjacent
// levels. Labels outside the strand contribute nothing.
struct Strand {
  std::map<int, std::vector<std::uint32_t>> levels;  // level -> sorted masks
};

// sign(i, U) = (-1)^(j-1) for i the j-th smallest element of U.
int taylor_sign(std::uint32_t mask, int i) {
  std::uint32_t below = mask & ((1u << i) - 1u);
  return std::popcount(below) % 2 == 0 ? 1 : -1;
}

Entries strand_homology(const Strand& strand, const std::vector<Multidegree>& lcm_table,
                        const Multidegree& degree, const FieldSpec& field) {
  Entries out;
  if (strand.levels.empty()) return out;
  int lo = strand.levels.begin()->first;
  int hi = strand.levels.rbegin()->first;
  auto level_of = [&](int p) -> const std::vector<std::uint32_t>* {
    auto it = strand.levels.find(p);
    return it == strand.levels.end() ? nullptr : &it->second;
  };
  auto boundary = [&](int p) {
    const std::vector<std::uint32_t>* from = level_of(p);
    const std::vector<std::uint32_t>* to = level_of(p - 1);
    IntMatrix m(to ? static_cast<int>(to->size()) : 0, from ? static_cast<int>(from->size()) : 0);
    if (!from || !to) return m;
    std::map<std::uint32_t, int> index;
    for (std::size_t k = 0; k < to->size(); ++k) index[(*to)[k]] = static_cast<int>(k);
    for (std::size_t col = 0; col < from->size(); ++col) {
      std::uint32_t mask = (*from)[col];
      for (int i = 0; i < 32; ++i) {
        if (!(mask & (1u << i))) continue;
        std::uint32_t sub = mask & ~(1u << i);
        if (lcm_table[sub] != degree) continue;  // differential entry lands in m, drops to 0
        auto it = index.find(sub);
        if (it != index.end()) m.at(it->second, static_cast<int>(col)) = taylor_sign(mask, i);
      }
    }
    return m;
  };
  for (int p = lo; p <= hi; ++p) {
    const std::vector<std::uint32_t>* basis = level_of(p);
    if (!basis) continue;
    int h = homology_rank(boundary(p + 1), boundary(p), field);
    if (h != 0) out[{p, degree}] = h;
  }
  return out;
}

}  // namespace

BettiTable betti_taylor(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t cap) {
  if (ideal.is_unit()) throw std::invalid_argument("Betti table of the zero module");
  const auto& gens = ideal.generators();
  std::size_t m = gens.size();
  if (m > cap) {
    throw ResourceError("Taylor engine cap: " + std::to_string(m) + " generators (cap " +
                            std::to_string(cap) + ")",
                        std::size_t{1} << std::min<std::size_t>(m, 63));
  }
  int n = ideal.ring_dim();
  std::size_t subsets = std::size_t{1} << m;
  std::vector<Multidegree> lcm_table(subsets, Multidegree(static_cast<std::size_t>(n), 0));
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    int low = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1u);
    const Multidegree& base = lcm_table[rest];
    const Monomial& g = gens[static_cast<std::size_t>(low)];
    Multidegree& dst = lcm_table[mask];
    for (int i = 0; i < n; ++i) {
      dst[static_cast<std::size_t>(i)] = std::max(base[static_cast<std::size_t>(i)], g.exponent(i));
    }
  }

  std::map<Multidegree, Strand> strands;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    strands[lcm_table[mask]].levels[std::popcount(mask)].push_back(mask);
  }

  std::vector<std::pair<const Multidegree*, const Strand*>> work;
  work.reserve(strands.size());
  for (const auto& [degree, strand] : strands) work.emplace_back(&degree, &strand);
  std::vector<Entries> partial = parallel_map<Entries>(work.size(), [&](std::size_t k) {
    return strand_homology(*work[k].second, lcm_table, *work[k].first, field);
  });

  BettiTable table;
  table.ring_dim = n;
  for (const Entries& part : partial) table.entries.insert(part.begin(), part.end());
  for (const auto& [key, rank] : table.entries) {
    if (key.first > n) throw std::logic_error("Betti index exceeds the syzygy bound");
    (void)rank;
  }
  return table;
}

namespace {

// Reduced simplicial homology of the upper Koszul complex at b:
// faces tau <= supp(b) with x^(b - tau) in I, graded by |tau| - 1.
Entries koszul_degree_entries(const MonomialIdeal& ideal, const Multidegree& degree,
                              const FieldSpec& field) {
  Entries out;
  int n = ideal.ring_dim();
  std::vector<int> supp;
  for (int i = 0; i < n; ++i) {
    if (degree[static_cast<std::size_t>(i)] > 0) supp.push_back(i);
  }
  int s = static_cast<int>(supp.size());
  std::map<int, std::vector<std::uint32_t>> faces;  // |tau| -> masks over supp
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    Multidegree e(degree);
    for (int j = 0; j < s; ++j) {
      if (mask & (1u << j)) e[static_cast<std::size_t>(supp[static_cast<std::size_t>(j)])] -= 1;
    }
    if (ideal.contains(Monomial(e))) faces[std::popcount(mask)].push_back(mask);
  }
  if (faces.empty() || !faces.count(0)) return out;  // void complex

  auto boundary = [&](int card) {
    // From |tau| = card to |tau| = card - 1; card 0 maps to the empty level.
    auto from_it = faces.find(card);
    auto to_it = faces.find(card - 1);
    const std::vector<std::uint32_t>* from = from_it == faces.end() ? nullptr : &from_it->second;
    const std::vector<std::uint32_t>* to = to_it == faces.end() ? nullptr : &to_it->second;
    IntMatrix m(to ? static_cast<int>(to->size()) : 0, from ? static_cast<int>(from->size()) : 0);
    if (!from || !to) return m;
    std::map<std::uint32_t, int> index;
    for (std::size_t k = 0; k < to->size(); ++k) index[(*to)[k]] = static_cast<int>(k);
    for (std::size_t col = 0; col < from->size(); ++col) {
      std::uint32_t mask = (*from)[col];
      int j = 0;
      for (int bitpos = 0; bitpos < s; ++bitpos) {
        if (!(mask & (1u << bitpos))) continue;
        std::uint32_t sub = mask & ~(1u << bitpos);
        auto it = index.find(sub);
        if (it == index.end()) throw std::logic_error("Koszul complex is not downward closed");
        m.at(it->second, static_cast<int>(col)) = j % 2 == 0 ? 1 : -1;
        ++j;
      }
    }
    return m;
  };

  int max_card = faces.rbegin()->first;
  for (int card = 0; card <= max_card; ++card) {
    if (!faces.count(card)) continue;
    // Homological dimension d = card - 1; contributes to beta_{d+2} = card+1.
    int h = homology_rank(boundary(card + 1), boundary(card), field);
    if (h != 0) out[{card + 1, degree}] = h;
  }
  return out;
}

}  // namespace

BettiTable betti_koszul(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t lattice_cap) {
  if (ideal.is_unit()) throw std::invalid_argument("Betti table of the zero module");
  int n = ideal.ring_dim();
  BettiTable table;
  table.ring_dim = n;
  table.entries[{0, Multidegree(static_cast<std::size_t>(n), 0)}] = 1;
  if (ideal.is_zero()) return table;

  // lcm lattice: join closure of the generator degrees.
  std::set<Multidegree> lattice;
  std::vector<Multidegree> queue;
  for (const Monomial& g : ideal.generators()) {
    if (lattice.insert(g.exponents()).second) queue.push_back(g.exponents());
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Multidegree current = queue[head];  // copy: queue reallocates
    std::vector<Multidegree> snapshot(lattice.begin(), lattice.end());
    for (const Multidegree& other : snapshot) {
      Multidegree join(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        join[static_cast<std::size_t>(i)] =
            std::max(current[static_cast<std::size_t>(i)], other[static_cast<std::size_t>(i)]);
      }
      if (lattice.insert(join).second) {
        queue.push_back(join);
        if (lattice.size() > lattice_cap) {
          throw ResourceError("lcm lattice cap: more than " + std::to_string(lattice_cap) +
                                  " multidegrees",
                              lattice.size());
        }
      }
    }
  }

  std::vector<Multidegree> degrees(lattice.begin(), lattice.end());
  std::vector<Entries> partial = parallel_map<Entries>(degrees.size(), [&](std::size_t k) {
    return koszul_degree_entries(ideal, degrees[k], field);
  });
  for (const Entries& part : partial) table.entries.insert(part.begin(), part.end());
  for (const auto& [key, rank] : table.entries) {
    if (key.first > n) throw std::logic_error("Betti index exceeds the syzygy bound");
    (void)rank;
  }
  return table;
}

BettiTable betti(const MonomialIdeal& ideal, const FieldSpec& field, Engine engine) {
  switch (engine) {
    case Engine::taylor:
      return betti_taylor(ideal, field);
    case Engine::koszul:
      return betti_koszul(ideal, field);
    case Engine::automatic:
      return ideal.generators().size() <= kTaylorGeneratorCap ? betti_taylor(ideal, field)
                                                              : betti_koszul(ideal, field);
    case Engine::both: {
      BettiTable taylor = betti_taylor(ideal, field);
      BettiTable koszul = betti_koszul(ideal, field);
      if (taylor != koszul) {
        std::string detail = "engines disagree";
        for (const auto& [key, rank] : taylor.entries) {
          auto it = koszul.entries.find(key);
          if (it == koszul.entries.end() || it->second != rank) {
            detail += " at i=" + std::to_string(key.first);
            break;
          }
        }
        throw EngineMismatchError(detail);
      }
      return taylor;
    }
  }
  throw std::logic_error("unreachable engine");
}

bool taylor_is_minimal(const MonomialIdeal& ideal, std::size_t cap) {
  const auto& gens = ideal.generators();
  std::size_t m = gens.size();
  if (m > cap) {
    throw ResourceError("Taylor minimality cap: " + std::to_string(m) + " generators (cap " +
                            std::to_string(cap) + ")",
                        std::size_t{1} << std::min<std::size_t>(m, 63));
  }
  if (m == 0) return true;
  int n = ideal.ring_dim();
  std::size_t subsets = std::size_t{1} << m;
  std::vector<Multidegree> lcm_table(subsets, Multidegree(static_cast<std::size_t>(n), 0));
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    int low = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1u);
    const Multidegree& base = lcm_table[rest];
    const Monomial& g = gens[static_cast<std::size_t>(low)];
    for (int i = 0; i < n; ++i) {
      lcm_table[mask][static_cast<std::size_t>(i)] =
          std::max(base[static_cast<std::size_t>(i)], g.exponent(i));
    }
    for (int i = 0; i < static_cast<int>(m); ++i) {
      if (!(mask & (1u << i))) continue;
      if (lcm_table[mask & ~(1u << i)] == lcm_table[mask]) return false;
    }
  }
  return true;
}

Exponent lcm_degree(const MonomialIdeal& ideal) {
  return lcm_of(ideal.generators(), ideal.ring_dim()).degree();
}

DepthProfile depth_profile(const WeightedTree& tree, int t_max, const FieldSpec& field) {
  if (t_max < 1) throw std::invalid_argument("depth profile requires t_max >= 1");
  MonomialIdeal ideal = edge_ideal(tree);
  DepthProfile profile;
  for (int t = 1; t <= t_max; ++t) {
    try {
      BettiTable table = betti(ideal.power(t), field);
      profile.depths.push_back(table.depth());
    } catch (const ResourceError&) {
      profile.truncated = true;
      break;
    }
  }
  if (!profile.depths.empty()) {
    int stable = static_cast<int>(profile.depths.size());
    while (stable > 1 && profile.depths[static_cast<std::size_t>(stable - 2)] ==
                             profile.depths[static_cast<std::size_t>(stable - 1)]) {
      --stable;
    }
    profile.stable_from = stable;
  }
  return profile;
}

}  // namespace wtreelab
