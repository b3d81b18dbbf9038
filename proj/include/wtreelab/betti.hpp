#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wtreelab/field.hpp"
#include "wtreelab/ideal.hpp"
#include "wtreelab/weighted_tree.hpp"

namespace wtreelab {

/// Generator-count cap for the Taylor engine (2^m subsets).
inline constexpr std::size_t kTaylorGeneratorCap = 14;
/// Size cap for the lcm lattice enumerated by the Koszul engine.
inline constexpr std::size_t kLcmLatticeCap = 100000;

/// Multigraded Betti table of the quotient S/I:
/// (homological index, multidegree) -> rank, zero entries dropped.
struct BettiTable {
  int ring_dim = 0;
  std::map<std::pair<int, std::vector<Exponent>>, std::int64_t> entries;

  int pd() const;
  int depth() const;
  /// reg(S/I) = max over entries of deg(b) - i.
  int reg_quotient() const;
  int reg_ideal() const { return reg_quotient() + 1; }
  /// Total Betti numbers beta_i = sum over multidegrees.
  std::map<int, std::int64_t> total() const;

  bool operator==(const BettiTable&) const = default;
};

enum class Engine { automatic, taylor, koszul, both };

/// Strand-by-strand homology of the Taylor complex tensored with the field.
BettiTable betti_taylor(const MonomialIdeal& ideal, const FieldSpec& field,
                        std::size_t cap = kTaylorGeneratorCap);

/// Independent oracle: upper Koszul complexes over the lcm lattice,
/// beta_{i+1,b}(S/I) = dim \~H_{i-1}(K^b) for i >= 0.
BettiTable betti_koszul(const MonomialIdeal& ideal, const FieldSpec& field,
                        std::size_t lattice_cap = kLcmLatticeCap);

/// Engine dispatch: automatic picks Taylor for small generator counts and
/// Koszul otherwise; both cross-checks and throws EngineMismatchError on any
/// disagreement.
BettiTable betti(const MonomialIdeal& ideal, const FieldSpec& field,
                 Engine engine = Engine::automatic);

/// True iff no proper subset shares its lcm with a one-larger subset,
/// i.e. the Taylor differential has no unit entries.
bool taylor_is_minimal(const MonomialIdeal& ideal, std::size_t cap = kTaylorGeneratorCap);

/// Degree of lcm of the full generating set.
Exponent lcm_degree(const MonomialIdeal& ideal);

struct DepthProfile {
  std::vector<int> depths;  // depth(S/I^t) for t = 1..
  bool truncated = false;   // a resource cap cut the horizon short
  std::optional<int> stable_from;  // first t whose tail is constant in-horizon

  bool operator==(const DepthProfile&) const = default;
};

/// depth(S/I^t) for t = 1..t_max via the Betti engines; on a cap the profile
/// so far is returned with the truncation marker set.
DepthProfile depth_profile(const WeightedTree& tree, int t_max, const FieldSpec& field);

}  // namespace wtreelab
