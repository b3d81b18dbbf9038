#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wtreelab/monomial.hpp"

namespace wtreelab {

/// Pre-minimalization cap on the number of generator products expanded by
/// power().
inline constexpr std::size_t kDefaultPowerCap = 4000;

/// Monomial ideal held as its unique minimal generating set, sorted
/// lexicographically by exponent vector. The unit ideal carries an explicit
/// flag and stores no generators.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(int ring_dim);
  static MonomialIdeal whole_ring(int ring_dim);
  /// Divisibility-minimal subset of `gens` in canonical order; idempotent.
  static MonomialIdeal minimalize(std::vector<Monomial> gens, int ring_dim);
  static MonomialIdeal variable_ideal(const std::vector<int>& vars, int ring_dim);

  int ring_dim() const { return ring_dim_; }
  bool is_unit() const { return unit_; }
  bool is_zero() const { return !unit_ && gens_.empty(); }
  bool is_proper() const { return !unit_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  /// Membership: some generator divides f (everything for the unit ideal).
  bool contains(const Monomial& f) const;

  /// t-th power via multisets of generators; throws ResourceError with the
  /// projected product count when it exceeds `cap`.
  MonomialIdeal power(Exponent t, std::size_t cap = kDefaultPowerCap) const;

  /// (I : f). Returns the unit ideal exactly when f lies in I.
  MonomialIdeal colon(const Monomial& f) const;
  /// (I : J) = intersection of (I : g) over the generators of J; J nonzero.
  MonomialIdeal colon(const MonomialIdeal& j) const;
  MonomialIdeal intersect(const MonomialIdeal& j) const;
  MonomialIdeal sum(const MonomialIdeal& j) const;
  MonomialIdeal radical() const;

  bool operator==(const MonomialIdeal&) const = default;

  std::string str() const;
  std::string str(std::span<const std::string> names) const;
  /// Exponent-vector rendering, e.g. "[[6,6,0],[0,5,5]]"; "unit"/"zero" for
  /// the flagged cases. Stable across runs; used in verdict witnesses.
  std::string str_exponents() const;

 private:
  MonomialIdeal(int ring_dim, bool unit, std::vector<Monomial> gens);

  int ring_dim_ = 0;
  bool unit_ = false;
  std::vector<Monomial> gens_;
};

/// Saturation test: (I : m) = I for the maximal ideal m, equivalent to
/// depth(S/I) >= 1. Requires I proper and nonzero.
bool depth_at_least_one(const MonomialIdeal& ideal);

}  // namespace wtreelab
