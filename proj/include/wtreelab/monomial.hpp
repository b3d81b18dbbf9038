#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wtreelab {

using Exponent = std::int64_t;

/// Monomial in a polynomial ring with a fixed variable order, stored as its
/// exponent vector. Immutable after construction; all arithmetic is exact
/// with overflow checks.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(int ring_dim);
  static Monomial variable(int ring_dim, int index);

  int ring_dim() const { return static_cast<int>(exponents_.size()); }
  const std::vector<Exponent>& exponents() const { return exponents_; }
  Exponent exponent(int i) const { return exponents_[static_cast<std::size_t>(i)]; }
  Exponent degree() const;
  std::vector<int> support() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial pow(Exponent k) const;
  /// this / gcd(this, f): generator image under the colon by f.
  Monomial colon(const Monomial& f) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  std::string str() const;
  std::string str(std::span<const std::string> names) const;

  // Lexicographic on exponent vectors; the canonical generator order.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Exponent> exponents_;
};

/// Componentwise max over a set of monomials; the unit monomial for an
/// empty set.
Monomial lcm_of(std::span<const Monomial> monomials, int ring_dim);

}  // namespace wtreelab
