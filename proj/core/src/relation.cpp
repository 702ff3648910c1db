#include "mwp/relation.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace mwp {

namespace {

const std::shared_ptr<const std::vector<std::string>>& empty_variables() {
  static const auto empty = std::make_shared<const std::vector<std::string>>();
  return empty;
}

const std::shared_ptr<const FlowMatrix>& empty_matrix() {
  static const auto empty = std::make_shared<const FlowMatrix>();
  return empty;
}

std::vector<std::string> union_of(const std::vector<std::string>& a,
                                  const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  std::set<std::string> seen(a.begin(), a.end());
  for (const auto& name : b) {
    if (seen.insert(name).second) out.push_back(name);
  }
  return out;
}

}  // namespace

Relation::Relation() : variables_(empty_variables()), matrix_(empty_matrix()) {}

Relation::Relation(std::vector<std::string> variables)
    : Relation(variables, FlowMatrix::identity(variables.size())) {}

Relation::Relation(std::vector<std::string> variables, FlowMatrix matrix) {
  if (matrix.dim() != variables.size()) {
    throw InternalError("relation: " + std::to_string(variables.size()) + " variables for a " +
                        std::to_string(matrix.dim()) + "-dimensional matrix");
  }
  std::set<std::string> distinct(variables.begin(), variables.end());
  if (distinct.size() != variables.size()) {
    throw InternalError("relation: duplicate variable names");
  }
  variables_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
  matrix_ = std::make_shared<const FlowMatrix>(std::move(matrix));
}

std::optional<std::size_t> Relation::index_of(const std::string& name) const {
  const auto& vars = variables();
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars.begin());
}

Relation Relation::extended_to(const std::vector<std::string>& target) const {
  if (target == variables()) return *this;
  std::unordered_map<std::string, std::size_t> old_slot;
  for (std::size_t i = 0; i < size(); ++i) old_slot.emplace(variables()[i], i);

  std::vector<std::optional<std::size_t>> from(target.size());
  std::size_t mapped = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (auto it = old_slot.find(target[i]); it != old_slot.end()) {
      from[i] = it->second;
      ++mapped;
    }
  }
  if (mapped != size()) throw InternalError("extended_to: target drops variables");

  FlowMatrix out(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (from[i] && from[j]) {
        out.at(i, j) = matrix().at(*from[i], *from[j]);
      } else if (i == j) {
        out.at(i, j) = Polynomial(Coefficient::M);
      }
    }
  }
  return Relation(target, std::move(out));
}

std::pair<Relation, Relation> homogenise(const Relation& a, const Relation& b) {
  if (a.variables() == b.variables()) return {a, b};
  const auto target = union_of(a.variables(), b.variables());
  return {a.extended_to(target), b.extended_to(target)};
}

Relation compose(const Relation& a, const Relation& b) {
  auto [lhs, rhs] = homogenise(a, b);
  return Relation(lhs.variables(), matrix_product(lhs.matrix(), rhs.matrix()));
}

Relation relation_sum(const Relation& a, const Relation& b) {
  auto [lhs, rhs] = homogenise(a, b);
  if (lhs.shares_storage_with(rhs)) return lhs;
  return Relation(lhs.variables(), matrix_sum(lhs.matrix(), rhs.matrix()));
}

Relation while_close(const Relation& body) {
  auto fix = closure(body.matrix());
  const auto n = fix.dim();

  for (std::size_t col = 0; col < n; ++col) {
    std::vector<DeltaList> failing;
    for (std::size_t row = 0; row < n; ++row) {
      for (const auto& mono : fix.at(row, col).monomials()) {
        const bool bad = mono.scalar() >= Coefficient::P ||
                         (row == col && mono.scalar() >= Coefficient::W);
        if (bad) failing.push_back(mono.deltas());
      }
    }
    for (const auto& guard : failing) {
      const Monomial inf(Coefficient::Inf, guard);
      for (std::size_t row = 0; row < n; ++row) fix.at(row, col).insert(inf);
    }
  }
  return Relation(body.variables(), std::move(fix));
}

Relation RelationList::compose_all(const Relation& fallback) const {
  if (relations.empty()) return fallback;
  Relation acc = relations.front();
  for (std::size_t i = 1; i < relations.size(); ++i) acc = compose(acc, relations[i]);
  return acc;
}

Relation RelationList::sum_all(const Relation& fallback) const {
  if (relations.empty()) return fallback;
  Relation acc = relations.front();
  for (std::size_t i = 1; i < relations.size(); ++i) acc = relation_sum(acc, relations[i]);
  return acc;
}

std::string to_string(const Relation& r) {
  std::string out;
  for (std::size_t col = 0; col < r.size(); ++col) {
    for (std::size_t row = 0; row < r.size(); ++row) {
      const auto& p = r.matrix().at(row, col);
      if (p.is_zero()) continue;
      out += r.variables()[row] + " -> " + r.variables()[col] + ": " + to_string(p) + "\n";
    }
  }
  return out;
}

}  // namespace mwp
