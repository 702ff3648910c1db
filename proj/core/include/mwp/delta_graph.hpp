#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mwp/monomial.hpp"

namespace mwp {

/// Forbidden choice fragments, i.e. the guards of infinite monomials.
///
/// Guards are stored in layers keyed by their length. A guard that is a
/// superset of a stored guard forbids nothing new and is never stored. Guards
/// of one layer that differ in the alternative picked at exactly one index
/// are linked by an edge; fusion uses these edges to find triples covering
/// all alternatives at an index.
class DeltaGraph {
 public:
  using Layer = std::set<DeltaList>;

  /// Returns false when an existing guard already subsumes `guard`.
  bool insert(DeltaList guard);

  /// Replaces every triple {g[k:=0], g[k:=1], g[k:=2]} by g without k, until
  /// no triple is left. The forbidden set is unchanged.
  void fusion();

  const std::map<std::size_t, Layer>& layers() const noexcept { return layers_; }
  std::vector<DeltaList> guards() const;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return layers_.empty(); }
  /// The empty guard is stored: no assignment passes.
  bool forbids_everything() const noexcept { return layers_.contains(0); }
  bool forbids(Assignment assignment) const noexcept;

  /// Guards linked to `guard` (all in its layer).
  const std::set<DeltaList>& neighbours(const DeltaList& guard) const;

  /// Number of indices at which two guards disagree; an index bound by only
  /// one of them counts as a disagreement.
  static std::size_t distance(const DeltaList& a, const DeltaList& b) noexcept;

 private:
  void erase(const DeltaList& guard);

  std::map<std::size_t, Layer> layers_;
  std::map<DeltaList, std::set<DeltaList>> edges_;
};

/// A set of total assignments over indices 0..num_indices-1, stored as
/// disjoint fragments. A fragment fixes the alternatives of some indices and
/// leaves all others free.
class ChoiceSet {
 public:
  ChoiceSet() = default;
  ChoiceSet(std::uint32_t num_indices, std::vector<DeltaList> fragments);

  std::uint32_t num_indices() const noexcept { return num_indices_; }
  const std::vector<DeltaList>& fragments() const noexcept { return fragments_; }
  bool empty() const noexcept { return fragments_.empty(); }

  /// Exact number of assignments, in decimal.
  std::string count() const;
  /// True when the set holds more than `limit` assignments.
  bool count_exceeds(std::uint64_t limit) const;

  bool contains(Assignment assignment) const noexcept;

  /// Visits every assignment in fragment order.
  void for_each(const std::function<void(Assignment)>& visit) const;
  /// All assignments; callers check count_exceeds first.
  std::vector<std::vector<std::uint8_t>> expand() const;

  friend bool operator==(const ChoiceSet&, const ChoiceSet&) = default;

 private:
  std::uint32_t num_indices_ = 0;
  std::vector<DeltaList> fragments_;
};

/// Assignments over num_indices indices that match no guard in `graph`.
ChoiceSet passing_assignments(const DeltaGraph& graph, std::uint32_t num_indices);

/// Cheaper emptiness test for the same set.
bool has_passing_assignment(const DeltaGraph& graph, std::uint32_t num_indices);

}  // namespace mwp
