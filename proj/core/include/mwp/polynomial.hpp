#pragma once

#include <string>
#include <vector>

#include "mwp/monomial.hpp"

namespace mwp {

/// A canonical list of monomials: sorted by the monomial order, free of zero
/// monomials, and no monomial contains another. The empty list is zero.
class Polynomial {
 public:
  Polynomial() = default;
  /// The unguarded constant `c`.
  explicit Polynomial(Coefficient c);
  /// Canonicalizes an arbitrary monomial list.
  explicit Polynomial(std::vector<Monomial> monomials);

  /// Skips the sort; `sorted` must already be in canonical monomial order.
  static Polynomial from_sorted(std::vector<Monomial> sorted);

  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  bool is_zero() const noexcept { return monomials_.empty(); }
  std::size_t size() const noexcept { return monomials_.size(); }

  /// Adds one monomial, dropping it if an existing monomial contains it and
  /// evicting the monomials it contains.
  void insert(const Monomial& mono);

  /// Largest guard index plus one across all monomials.
  std::uint32_t index_bound() const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Monomial> monomials_;
};

/// Restores the canonical form of a sorted-or-not monomial list in place.
void canonicalize(std::vector<Monomial>& monomials);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_times(const Polynomial& a, const Polynomial& b);
Coefficient poly_eval(const Polynomial& p, Assignment assignment) noexcept;

std::string to_string(const Polynomial& p);

}  // namespace mwp
