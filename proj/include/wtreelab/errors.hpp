#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wtreelab {

/// Thrown when a computation would exceed one of the configured size caps
/// (power expansion, Taylor subset count, lcm-lattice size).
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t projected)
      : std::runtime_error(what), projected_(projected) {}

  /// Projected size that tripped the cap.
  std::size_t projected() const { return projected_; }

 private:
  std::size_t projected_;
};

/// Thrown when the two Betti engines disagree on a table entry.
class EngineMismatchError : public std::logic_error {
 public:
  explicit EngineMismatchError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wtreelab
