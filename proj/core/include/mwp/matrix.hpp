#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwp/polynomial.hpp"

namespace mwp {

/// Raised when an operation's structural precondition is broken, e.g.
/// combining matrices of different dimensions.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense square matrix of polynomials, row-major. Entry (i, j) is the flow
/// from source slot i to target slot j.
class FlowMatrix {
 public:
  FlowMatrix() = default;
  /// The all-zero matrix.
  explicit FlowMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static FlowMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Polynomial& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Polynomial& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  /// Largest guard index plus one over all entries.
  std::uint32_t index_bound() const noexcept;
  /// Number of distinct derivation indices that appear in some guard.
  std::size_t distinct_indices() const;

  friend bool operator==(const FlowMatrix&, const FlowMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Polynomial> entries_;
};

FlowMatrix matrix_sum(const FlowMatrix& a, const FlowMatrix& b);
FlowMatrix matrix_product(const FlowMatrix& a, const FlowMatrix& b);

/// Join of all powers of `a`, including the identity. Throws InternalError if
/// the iteration fails to stabilize within its safety cap.
FlowMatrix closure(const FlowMatrix& a);

std::string to_string(const FlowMatrix& m);

}  // namespace mwp
