#include "mwp/polynomial.hpp"

#include <algorithm>

namespace mwp {

namespace {

// Under the canonical order a strict sub-guard sorts before its super-guards,
// so a monomial can only be contained by one that precedes it (or by its
// equal-guard neighbour with a larger scalar, which sorts right after it).
void eliminate_sorted(std::vector<Monomial>& sorted) {
  std::vector<Monomial> kept;
  kept.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    auto& mono = sorted[i];
    if (i + 1 < sorted.size() && sorted[i + 1].deltas() == mono.deltas()) continue;
    const auto size = mono.deltas().size();
    const bool contained = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) {
      return k.deltas().size() <= size && monomial_contains(k, mono);
    });
    if (!contained) kept.push_back(std::move(mono));
  }
  sorted = std::move(kept);
}

bool shares_index(const DeltaList& guard, const std::vector<bool>& used) {
  return std::any_of(guard.begin(), guard.end(), [&](const Delta& d) {
    return d.index < used.size() && used[d.index];
  });
}

}  // namespace

void canonicalize(std::vector<Monomial>& monomials) {
  std::erase_if(monomials, [](const Monomial& m) { return m.is_zero(); });
  std::sort(monomials.begin(), monomials.end());
  eliminate_sorted(monomials);
}

Polynomial::Polynomial(Coefficient c) {
  if (c != Coefficient::Zero) monomials_.emplace_back(c, DeltaList{});
}

Polynomial::Polynomial(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  canonicalize(monomials_);
}

Polynomial Polynomial::from_sorted(std::vector<Monomial> sorted) {
  std::erase_if(sorted, [](const Monomial& m) { return m.is_zero(); });
  eliminate_sorted(sorted);
  Polynomial out;
  out.monomials_ = std::move(sorted);
  return out;
}

void Polynomial::insert(const Monomial& mono) {
  if (mono.is_zero()) return;
  for (const auto& m : monomials_) {
    if (monomial_contains(m, mono)) return;
  }
  std::erase_if(monomials_, [&](const Monomial& m) { return monomial_contains(mono, m); });
  monomials_.insert(std::upper_bound(monomials_.begin(), monomials_.end(), mono), mono);
}

std::uint32_t Polynomial::index_bound() const noexcept {
  std::uint32_t bound = 0;
  for (const auto& m : monomials_) bound = std::max(bound, m.index_bound());
  return bound;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero() || a == b) return a;
  std::vector<Monomial> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.monomials().begin(), a.monomials().end(), b.monomials().begin(),
             b.monomials().end(), std::back_inserter(merged));
  return Polynomial::from_sorted(std::move(merged));
}

Polynomial poly_times(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};

  std::vector<bool> b_indices(b.index_bound(), false);
  for (const auto& m : b.monomials()) {
    for (const auto& d : m.deltas()) b_indices[d.index] = true;
  }

  // Each row of products a_i * b_j is already in canonical order when a_i
  // shares no index with b, because extending by a disjoint guard preserves
  // the order. Rows are then combined by merging instead of a full sort.
  std::vector<Monomial> acc;
  std::vector<Monomial> row;
  std::vector<Monomial> merged;
  for (const auto& lhs : a.monomials()) {
    row.clear();
    row.reserve(b.size());
    for (const auto& rhs : b.monomials()) {
      auto prod = monomial_product(lhs, rhs);
      if (!prod.is_zero()) row.push_back(std::move(prod));
    }
    if (shares_index(lhs.deltas(), b_indices)) std::sort(row.begin(), row.end());
    merged.clear();
    merged.reserve(acc.size() + row.size());
    std::merge(std::make_move_iterator(acc.begin()), std::make_move_iterator(acc.end()),
               std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()),
               std::back_inserter(merged));
    std::swap(acc, merged);
  }
  return Polynomial::from_sorted(std::move(acc));
}

Coefficient poly_eval(const Polynomial& p, Assignment assignment) noexcept {
  auto result = Coefficient::Zero;
  for (const auto& m : p.monomials()) result = join(result, monomial_eval(m, assignment));
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& m : p.monomials()) {
    if (!out.empty()) out += " + ";
    out += to_string(m);
  }
  return out;
}

}  // namespace mwp
