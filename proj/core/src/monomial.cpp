#include "mwp/monomial.hpp"

#include <algorithm>

namespace mwp {

std::strong_ordering compare_guards(const DeltaList& a, const DeltaList& b) noexcept {
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    // The list holding the smaller delta owns the minimum of the symmetric
    // difference, and ranks higher.
    return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.size() <=> b.size();
}

bool guard_subset(const DeltaList& sub, const DeltaList& super) noexcept {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool merge_guards(const DeltaList& a, const DeltaList& b, DeltaList& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->index < ib->index) {
      out.push_back(*ia++);
    } else if (ib->index < ia->index) {
      out.push_back(*ib++);
    } else {
      if (ia->alternative != ib->alternative) return false;
      out.push_back(*ia++);
      ++ib;
    }
  }
  out.insert(out.end(), ia, a.end());
  out.insert(out.end(), ib, b.end());
  return true;
}

Monomial::Monomial(Coefficient scalar, DeltaList deltas) : scalar_(scalar) {
  if (scalar_ == Coefficient::Zero) return;
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  for (std::size_t i = 1; i < deltas.size(); ++i) {
    if (deltas[i].index == deltas[i - 1].index) {
      scalar_ = Coefficient::Zero;
      return;
    }
  }
  deltas_ = std::move(deltas);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = compare_guards(a.deltas_, b.deltas_); c != 0) return c;
  return a.scalar_ <=> b.scalar_;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  const auto scalar = times(a.scalar(), b.scalar());
  if (scalar == Coefficient::Zero) return {};
  DeltaList merged;
  if (!merge_guards(a.deltas(), b.deltas(), merged)) return {};
  Monomial out;
  out.scalar_ = scalar;
  out.deltas_ = std::move(merged);
  return out;
}

bool monomial_contains(const Monomial& a, const Monomial& b) noexcept {
  return a.scalar() >= b.scalar() && guard_subset(a.deltas(), b.deltas());
}

Coefficient monomial_eval(const Monomial& mono, Assignment assignment) noexcept {
  for (const auto& d : mono.deltas()) {
    if (assignment[d.index] != d.alternative) return Coefficient::Zero;
  }
  return mono.scalar();
}

std::string to_string(const Monomial& mono) {
  std::string out(to_string(mono.scalar()));
  for (const auto& d : mono.deltas()) {
    out += ".d(" + std::to_string(d.alternative) + "," + std::to_string(d.index) + ")";
  }
  return out;
}

}  // namespace mwp
