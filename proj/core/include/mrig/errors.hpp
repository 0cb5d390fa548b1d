#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mrig {

// Raised for inconsistent vector/matrix sizes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a weight matrix or edge list is malformed.
class GraphError : public std::invalid_argument {
 public:
  enum class Kind { DuplicateEdge, InvalidWeight, IndexOutOfRange, NotSymmetric, NonZeroDiagonal };

  GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Raised when x does not lie in the open set C_W.  `pivot()` is the index of
// the first factorization pivot that fell below tolerance.
class NotInConeError : public std::domain_error {
 public:
  NotInConeError(std::size_t pivot, double value)
      : std::domain_error("point is not in the cone (pivot " + std::to_string(pivot) +
                          " = " + std::to_string(value) + ")"),
        pivot_(pivot),
        value_(value) {}

  std::size_t pivot() const noexcept { return pivot_; }
  double pivot_value() const noexcept { return value_; }

 private:
  std::size_t pivot_;
  double value_;
};

}  // namespace mrig
