#include "wtreelab/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "wtreelab/errors.hpp"

namespace wtreelab {

namespace {

void require_dim(int ring_dim, const Monomial& m) {
  if (m.ring_dim() != ring_dim) {
    throw std::invalid_argument("monomial/ideal ring dimension mismatch");
  }
}

void require_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring_dim() != b.ring_dim()) {
    throw std::invalid_argument("ideal ring dimension mismatch");
  }
}

// Multiset combinations C(k + t - 1, t), clamped to cap + 1 on overflow.
std::size_t projected_products(std::size_t k, Exponent t, std::size_t cap) {
  // C(k - 1 + t, t) computed incrementally.
  unsigned long long result = 1;
  for (Exponent i = 1; i <= t; ++i) {
    unsigned long long numer = static_cast<unsigned long long>(k) - 1 + static_cast<unsigned long long>(i);
    if (result > (cap + 1) * 16ULL) return cap + 1;  // early clamp, stays exact below cap
    result = result * numer / static_cast<unsigned long long>(i);
  }
  return result > cap ? cap + 1 : static_cast<std::size_t>(result);
}

}  // namespace

MonomialIdeal::MonomialIdeal(int ring_dim, bool unit, std::vector<Monomial> gens)
    : ring_dim_(ring_dim), unit_(unit), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::zero(int ring_dim) {
  if (ring_dim <= 0) throw std::invalid_argument("ring dimension must be positive");
  return MonomialIdeal(ring_dim, false, {});
}

MonomialIdeal MonomialIdeal::whole_ring(int ring_dim) {
  if (ring_dim <= 0) throw std::invalid_argument("ring dimension must be positive");
  return MonomialIdeal(ring_dim, true, {});
}

MonomialIdeal MonomialIdeal::minimalize(std::vector<Monomial> gens, int ring_dim) {
  if (ring_dim <= 0) throw std::invalid_argument("ring dimension must be positive");
  for (const Monomial& g : gens) {
    require_dim(ring_dim, g);
    if (g.is_one()) return whole_ring(ring_dim);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (j != i && gens[j].divides(gens[i])) redundant = true;
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  return MonomialIdeal(ring_dim, false, std::move(minimal));
}

MonomialIdeal MonomialIdeal::variable_ideal(const std::vector<int>& vars, int ring_dim) {
  std::vector<Monomial> gens;
  gens.reserve(vars.size());
  for (int v : vars) gens.push_back(Monomial::variable(ring_dim, v));
  return minimalize(std::move(gens), ring_dim);
}

bool MonomialIdeal::contains(const Monomial& f) const {
  require_dim(ring_dim_, f);
  if (unit_) return true;
  return std::any_of(gens_.begin(), gens_.end(),
                     [&f](const Monomial& g) { return g.divides(f); });
}

MonomialIdeal MonomialIdeal::power(Exponent t, std::size_t cap) const {
  if (t < 1) throw std::invalid_argument("ideal power requires t >= 1");
  if (unit_ || is_zero() || t == 1) return *this;
  std::size_t projected = projected_products(gens_.size(), t, cap);
  if (projected > cap) {
    throw ResourceError("ideal power would expand " + std::to_string(projected) +
                            " generator products (cap " + std::to_string(cap) + ")",
                        projected);
  }
  std::vector<Monomial> products;
  products.reserve(projected);
  // Nondecreasing index tuples = multisets of generators.
  std::vector<std::size_t> pick(static_cast<std::size_t>(t), 0);
  while (true) {
    Monomial prod = gens_[pick[0]];
    for (std::size_t i = 1; i < pick.size(); ++i) prod = prod.times(gens_[pick[i]]);
    products.push_back(std::move(prod));
    std::size_t pos = pick.size();
    while (pos > 0 && pick[pos - 1] == gens_.size() - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t i = pos; i < pick.size(); ++i) pick[i] = pick[pos - 1];
  }
  return minimalize(std::move(products), ring_dim_);
}

MonomialIdeal MonomialIdeal::colon(const Monomial& f) const {
  require_dim(ring_dim_, f);
  if (unit_) return *this;
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.colon(f));
  return minimalize(std::move(gens), ring_dim_);
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& j) const {
  require_dim(*this, j);
  if (j.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  if (j.is_unit()) return *this;
  MonomialIdeal result = colon(j.gens_[0]);
  for (std::size_t i = 1; i < j.gens_.size(); ++i) {
    result = result.intersect(colon(j.gens_[i]));
  }
  return result;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& j) const {
  require_dim(*this, j);
  if (unit_) return j;
  if (j.unit_) return *this;
  if (is_zero() || j.is_zero()) return zero(ring_dim_);
  std::vector<Monomial> gens;
  gens.reserve(gens_.size() * j.gens_.size());
  for (const Monomial& a : gens_) {
    for (const Monomial& b : j.gens_) gens.push_back(Monomial::lcm(a, b));
  }
  return minimalize(std::move(gens), ring_dim_);
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& j) const {
  require_dim(*this, j);
  if (unit_ || j.unit_) return whole_ring(ring_dim_);
  std::vector<Monomial> gens = gens_;
  gens.insert(gens.end(), j.gens_.begin(), j.gens_.end());
  return minimalize(std::move(gens), ring_dim_);
}

MonomialIdeal MonomialIdeal::radical() const {
  if (unit_) return *this;
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) {
    std::vector<Exponent> e(static_cast<std::size_t>(ring_dim_), 0);
    for (int v : g.support()) e[static_cast<std::size_t>(v)] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return minimalize(std::move(gens), ring_dim_);
}

std::string MonomialIdeal::str() const {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(ring_dim_));
  for (int i = 0; i < ring_dim_; ++i) names.push_back("x" + std::to_string(i + 1));
  return str(names);
}

std::string MonomialIdeal::str(std::span<const std::string> names) const {
  if (unit_) return "(1)";
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens_[i].str(names);
  }
  return out + ")";
}

std::string MonomialIdeal::str_exponents() const {
  if (unit_) return "unit";
  if (gens_.empty()) return "zero";
  std::string out = "[";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ",";
    out += "[";
    for (int k = 0; k < ring_dim_; ++k) {
      if (k > 0) out += ",";
      out += std::to_string(gens_[i].exponent(k));
    }
    out += "]";
  }
  return out + "]";
}

bool depth_at_least_one(const MonomialIdeal& ideal) {
  if (ideal.is_unit() || ideal.is_zero()) {
    throw std::invalid_argument("saturation test requires a proper nonzero ideal");
  }
  std::vector<int> all(static_cast<std::size_t>(ideal.ring_dim()));
  for (int i = 0; i < ideal.ring_dim(); ++i) all[static_cast<std::size_t>(i)] = i;
  MonomialIdeal maximal = MonomialIdeal::variable_ideal(all, ideal.ring_dim());
  return ideal.colon(maximal) == ideal;
}

}  // namespace wtreelab
