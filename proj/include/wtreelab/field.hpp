#pragma once

#include <cstdint>
#include <string>

namespace wtreelab {

/// Coefficient field for homology ranks: the rationals or a prime field.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(std::int64_t p);
  /// GF(32003), the conventional cross-check prime.
  static FieldSpec default_field() { return FieldSpec(32003); }

  bool is_rational() const { return p_ == 0; }
  std::int64_t characteristic() const { return p_; }
  std::string str() const { return p_ == 0 ? "rational" : "gf(" + std::to_string(p_) + ")"; }

  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;
};

/// Accepts "rational", "gf(P)", or a bare prime.
FieldSpec field_from_string(const std::string& text);

}  // namespace wtreelab
