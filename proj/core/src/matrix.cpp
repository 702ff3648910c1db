#include "mwp/matrix.hpp"

#include <algorithm>
#include <set>

namespace mwp {

namespace {

void require_same_dim(const FlowMatrix& a, const FlowMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw InternalError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                        " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

FlowMatrix FlowMatrix::identity(std::size_t dim) {
  FlowMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out.at(i, i) = Polynomial(Coefficient::M);
  return out;
}

std::uint32_t FlowMatrix::index_bound() const noexcept {
  std::uint32_t bound = 0;
  for (const auto& p : entries_) bound = std::max(bound, p.index_bound());
  return bound;
}

std::size_t FlowMatrix::distinct_indices() const {
  std::set<std::uint32_t> seen;
  for (const auto& p : entries_) {
    for (const auto& m : p.monomials()) {
      for (const auto& d : m.deltas()) seen.insert(d.index);
    }
  }
  return seen.size();
}

FlowMatrix matrix_sum(const FlowMatrix& a, const FlowMatrix& b) {
  require_same_dim(a, b, "matrix_sum");
  FlowMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out.at(i, j) = poly_add(a.at(i, j), b.at(i, j));
  }
  return out;
}

FlowMatrix matrix_product(const FlowMatrix& a, const FlowMatrix& b) {
  require_same_dim(a, b, "matrix_product");
  const auto n = a.dim();
  FlowMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& lhs = a.at(i, k);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& rhs = b.at(k, j);
        if (rhs.is_zero()) continue;
        out.at(i, j) = poly_add(out.at(i, j), poly_times(lhs, rhs));
      }
    }
  }
  return out;
}

FlowMatrix closure(const FlowMatrix& a) {
  const auto n = a.dim();
  const auto indices = a.distinct_indices();
  // A walk of length (indices + 2) * n can reach every monomial a longer walk
  // produces, so the larger of the two bounds is never exceeded.
  const auto cap = std::max(n * n * indices, (indices + 2) * n) + 1;

  auto current = matrix_sum(FlowMatrix::identity(n), a);
  for (std::size_t iter = 0; iter < cap; ++iter) {
    auto next = matrix_sum(current, matrix_product(current, a));
    if (next == current) return current;
    current = std::move(next);
  }
  throw InternalError("closure: no fixpoint after " + std::to_string(cap) + " iterations");
}

std::string to_string(const FlowMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ", ";
      out += to_string(m.at(i, j));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace mwp
