#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwp/matrix.hpp"

namespace mwp {

/// Program variables bound to a flow matrix. Row i and column i both refer to
/// variables()[i]: the row is the value before the fragment, the column the
/// value after it.
///
/// Storage is shared and immutable, so copies are cheap and an unchanged
/// relation can be handed back as the very same object.
class Relation {
 public:
  /// The empty relation.
  Relation();
  /// Identity over `variables`.
  explicit Relation(std::vector<std::string> variables);
  /// Throws InternalError on duplicate names or a dimension mismatch.
  Relation(std::vector<std::string> variables, FlowMatrix matrix);

  const std::vector<std::string>& variables() const noexcept { return *variables_; }
  const FlowMatrix& matrix() const noexcept { return *matrix_; }
  std::size_t size() const noexcept { return variables_->size(); }

  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Re-expresses the relation over `target`, which must list every current
  /// variable. Fresh variables flow only to themselves.
  Relation extended_to(const std::vector<std::string>& target) const;

  /// True when both relations reference the same underlying storage.
  bool shares_storage_with(const Relation& other) const noexcept {
    return variables_ == other.variables_ && matrix_ == other.matrix_;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.variables() == b.variables() && a.matrix() == b.matrix();
  }

 private:
  std::shared_ptr<const std::vector<std::string>> variables_;
  std::shared_ptr<const FlowMatrix> matrix_;
};

/// Extends both relations to the union of their variables: a's order first,
/// then b's unseen variables in order. When the lists are already equal both
/// inputs are returned untouched (sharing storage with the arguments).
std::pair<Relation, Relation> homogenise(const Relation& a, const Relation& b);

/// Sequential composition: `a` runs first, then `b`.
Relation compose(const Relation& a, const Relation& b);

/// Join of two alternative fragments (branches of a conditional).
Relation relation_sum(const Relation& a, const Relation& b);

/// Loop fixpoint with failure correction. After the closure of the body, any
/// monomial of scalar p or above anywhere, or w or above on the diagonal,
/// marks its column: an infinite monomial with the same guard is added to
/// every entry of that column. Under a fixed assignment this is the scalar
/// rule "column c becomes all infinite when it holds p, or when its diagonal
/// entry exceeds m".
Relation while_close(const Relation& body);

/// Intermediate relations handled as a group.
struct RelationList {
  std::vector<Relation> relations;

  /// Left-to-right composition; empty lists yield `fallback`.
  Relation compose_all(const Relation& fallback) const;
  /// Join of all relations; empty lists yield `fallback`.
  Relation sum_all(const Relation& fallback) const;
};

std::string to_string(const Relation& r);

}  // namespace mwp
