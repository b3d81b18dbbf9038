#include "wtreelab/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace wtreelab {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return a + b;
}

void require_same_dim(const Monomial& a, const Monomial& b) {
  if (a.ring_dim() != b.ring_dim()) {
    throw std::invalid_argument("monomial ring dimension mismatch");
  }
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {
  for (Exponent e : exponents_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
}

Monomial Monomial::one(int ring_dim) {
  if (ring_dim < 0) throw std::invalid_argument("negative ring dimension");
  return Monomial(std::vector<Exponent>(static_cast<std::size_t>(ring_dim), 0));
}

Monomial Monomial::variable(int ring_dim, int index) {
  if (index < 0 || index >= ring_dim) throw std::invalid_argument("variable index out of range");
  std::vector<Exponent> e(static_cast<std::size_t>(ring_dim), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return Monomial(std::move(e));
}

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (Exponent e : exponents_) d = checked_add(d, e);
  return d;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < ring_dim(); ++i) {
    if (exponents_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
  }
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  require_same_dim(*this, other);
  std::vector<Exponent> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = checked_add(exponents_[i], other.exponents_[i]);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::pow(Exponent k) const {
  if (k < 0) throw std::invalid_argument("negative monomial power");
  std::vector<Exponent> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (exponents_[i] != 0 && k > std::numeric_limits<Exponent>::max() / exponents_[i]) {
      throw std::overflow_error("monomial exponent overflow");
    }
    e[i] = exponents_[i] * k;
  }
  return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& f) const {
  require_same_dim(*this, f);
  std::vector<Exponent> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = std::max<Exponent>(exponents_[i] - f.exponents_[i], 0);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  std::vector<Exponent> e(a.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  std::vector<Exponent> e(a.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(ring_dim()));
  for (int i = 0; i < ring_dim(); ++i) names.push_back("x" + std::to_string(i + 1));
  return str(names);
}

std::string Monomial::str(std::span<const std::string> names) const {
  if (is_one()) return "1";
  std::string out;
  for (int i = 0; i < ring_dim(); ++i) {
    Exponent e = exponents_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names[static_cast<std::size_t>(i)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Monomial lcm_of(std::span<const Monomial> monomials, int ring_dim) {
  Monomial acc = Monomial::one(ring_dim);
  for (const Monomial& m : monomials) acc = Monomial::lcm(acc, m);
  return acc;
}

}  // namespace wtreelab
