#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mwp/semiring.hpp"

namespace mwp {

/// Number of alternative rules available at each derivation point.
inline constexpr std::uint8_t kAlternatives = 3;

/// A choice guard: derivation point `index` must pick `alternative`.
struct Delta {
  std::uint8_t alternative = 0;
  std::uint32_t index = 0;

  friend constexpr bool operator==(const Delta&, const Delta&) = default;
  /// Ordered by index first, then alternative.
  friend constexpr std::strong_ordering operator<=>(const Delta& a, const Delta& b) noexcept {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.alternative <=> b.alternative;
  }
};

/// Sorted by index, at most one delta per index.
using DeltaList = std::vector<Delta>;

/// A total choice assignment: entry k is the alternative picked at index k.
using Assignment = std::span<const std::uint8_t>;

/// Orders sorted delta lists so that the set holding the smallest delta of
/// the symmetric difference is the greater one. The empty list comes first,
/// and extending two lists by a fixed guard that shares no delta with their
/// difference preserves their relative order.
std::strong_ordering compare_guards(const DeltaList& a, const DeltaList& b) noexcept;

/// True when every delta of `sub` also occurs in `super`.
bool guard_subset(const DeltaList& sub, const DeltaList& super) noexcept;

/// Merges two guards. Returns false when they pick different alternatives at
/// the same index.
bool merge_guards(const DeltaList& a, const DeltaList& b, DeltaList& out);

/// A coefficient that is only produced under the choices in its guard.
class Monomial {
 public:
  /// The zero monomial.
  Monomial() = default;
  /// Canonicalizes: sorts the guard, and collapses to zero on a Zero scalar
  /// or on contradictory deltas. Duplicated deltas are merged.
  Monomial(Coefficient scalar, DeltaList deltas);
  Monomial(Coefficient scalar, std::initializer_list<Delta> deltas)
      : Monomial(scalar, DeltaList(deltas)) {}

  Coefficient scalar() const noexcept { return scalar_; }
  const DeltaList& deltas() const noexcept { return deltas_; }
  bool is_zero() const noexcept { return scalar_ == Coefficient::Zero; }

  /// Highest index in the guard plus one (0 for an unguarded monomial).
  std::uint32_t index_bound() const noexcept {
    return deltas_.empty() ? 0 : deltas_.back().index + 1;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical order: guards by compare_guards, ties broken by scalar.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

  /// Scalar is the semiring product; guards merge. Contradictory guards
  /// yield the zero monomial.
  friend Monomial monomial_product(const Monomial& a, const Monomial& b);

 private:
  Coefficient scalar_ = Coefficient::Zero;
  DeltaList deltas_;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);

/// True when `a` dominates `b` under every assignment satisfying b's guard.
bool monomial_contains(const Monomial& a, const Monomial& b) noexcept;

/// `assignment` must cover every index in the guard.
Coefficient monomial_eval(const Monomial& mono, Assignment assignment) noexcept;

std::string to_string(const Monomial& mono);

}  // namespace mwp
