#include "wtreelab/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace wtreelab {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>(static_cast<__int128>(result) * base % p);
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int rank_mod_p(const IntMatrix& m, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(m.rows),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(m.cols)));
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      std::int64_t v = m.at(r, c) % p;
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v < 0 ? v + p : v;
    }
  }
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    std::int64_t inv = mod_pow(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p - 2, p);
    for (int r = rank + 1; r < m.rows; ++r) {
      std::int64_t factor = static_cast<std::int64_t>(
          static_cast<__int128>(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) * inv % p);
      if (factor == 0) continue;
      for (int c = col; c < m.cols; ++c) {
        __int128 v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                     static_cast<__int128>(factor) * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] % p;
        std::int64_t vv = static_cast<std::int64_t>(v % p);
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = vv < 0 ? vv + p : vv;
      }
    }
    ++rank;
  }
  return rank;
}

// Fraction-free Bareiss elimination; rank over Z equals rank over Q.
int rank_rational(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m.rows),
                                     std::vector<BigInt>(static_cast<std::size_t>(m.cols)));
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
  }
  int rank = 0;
  BigInt prev = 1;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    const BigInt piv = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    for (int r = rank + 1; r < m.rows; ++r) {
      for (int c = col + 1; c < m.cols; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            (piv * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
             a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] *
                 a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]) /
            prev;
      }
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  return FieldSpec(p);
}

FieldSpec field_from_string(const std::string& text) {
  if (text == "rational" || text == "rationals" || text == "qq") return FieldSpec::rationals();
  std::string digits = text;
  if (text.size() > 4 && text.substr(0, 3) == "gf(" && text.back() == ')') {
    digits = text.substr(3, text.size() - 4);
  }
  try {
    std::size_t used = 0;
    std::int64_t p = std::stoll(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(text);
    return FieldSpec::prime(p);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unrecognized field: " + text);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("unrecognized field: " + text);
  }
}

int rank_over(const IntMatrix& m, const FieldSpec& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

int homology_rank(const IntMatrix& boundary_in, const IntMatrix& boundary_out,
                  const FieldSpec& field) {
  if (boundary_out.cols != boundary_in.rows) {
    throw std::invalid_argument("homology_rank: boundary shapes are not composable");
  }
  // out * in = 0 over Z; a violation is a construction bug upstream.
  for (int r = 0; r < boundary_out.rows; ++r) {
    for (int c = 0; c < boundary_in.cols; ++c) {
      std::int64_t acc = 0;
      for (int k = 0; k < boundary_out.cols; ++k) acc += boundary_out.at(r, k) * boundary_in.at(k, c);
      if (acc != 0) throw std::logic_error("homology_rank: boundary composition is nonzero");
    }
  }
  int dim = boundary_out.cols;
  int rank_out = rank_over(boundary_out, field);
  int rank_in = rank_over(boundary_in, field);
  return dim - rank_out - rank_in;
}

}  // namespace wtreelab
