#pragma once

#include <cstdint>
#include <vector>

#include "wtreelab/field.hpp"

namespace wtreelab {

/// Dense integer matrix; boundary maps of chain complexes hold {-1, 0, +1}.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

  std::int64_t& at(int r, int c) {
    return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
  }
  std::int64_t at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
  }
};

/// Exact rank: Gaussian elimination mod p, fraction-free (Bareiss) over the
/// integers for the rational field.
int rank_over(const IntMatrix& m, const FieldSpec& field);

/// dim ker(boundary_out) - rank(boundary_in) over the field, for one level of
/// a chain complex: boundary_in feeds the level, boundary_out leaves it.
/// Requires composable shapes and boundary_out * boundary_in = 0 over Z.
int homology_rank(const IntMatrix& boundary_in, const IntMatrix& boundary_out,
                  const FieldSpec& field);

}  // namespace wtreelab
