#include "mwp/delta_graph.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>

#include "mwp/matrix.hpp"

namespace mwp {

namespace {

using BigCount = boost::multiprecision::cpp_int;

DeltaList without_position(const DeltaList& guard, std::size_t pos) {
  DeltaList out;
  out.reserve(guard.size() - 1);
  for (std::size_t i = 0; i < guard.size(); ++i) {
    if (i != pos) out.push_back(guard[i]);
  }
  return out;
}

BigCount total_count(const ChoiceSet& set) {
  BigCount total = 0;
  for (const auto& frag : set.fragments()) {
    BigCount term = 1;
    for (std::uint32_t i = frag.size(); i < set.num_indices(); ++i) term *= kAlternatives;
    total += term;
  }
  return total;
}

// Splits the assignment space on the index most guards mention, until each
// branch is either forbidden by an emptied guard or free of guards. Results
// are memoised on the remaining guard set, and fragments shared by all three
// alternatives at the split index come back without that index.
class Splitter {
 public:
  using Fragments = std::vector<DeltaList>;

  const Fragments& solve(std::vector<DeltaList> guards) {
    std::sort(guards.begin(), guards.end());
    guards.erase(std::unique(guards.begin(), guards.end()), guards.end());
    if (auto hit = memo_.find(guards); hit != memo_.end()) return hit->second;

    Fragments out;
    if (guards.empty()) {
      out.emplace_back();
    } else if (!guards.front().empty()) {
      const auto pick = most_frequent(guards);
      std::array<Fragments, kAlternatives> branches;
      for (std::uint8_t alt = 0; alt < kAlternatives; ++alt) {
        branches[alt] = solve(restrict(guards, pick, alt));
      }
      Fragments common;
      std::set_intersection(branches[0].begin(), branches[0].end(), branches[1].begin(),
                            branches[1].end(), std::back_inserter(common));
      Fragments shared;
      std::set_intersection(common.begin(), common.end(), branches[2].begin(), branches[2].end(),
                            std::back_inserter(shared));
      out = shared;
      for (std::uint8_t alt = 0; alt < kAlternatives; ++alt) {
        for (const auto& frag : branches[alt]) {
          if (std::binary_search(shared.begin(), shared.end(), frag)) continue;
          auto fixed = frag;
          fixed.insert(std::upper_bound(fixed.begin(), fixed.end(), Delta{alt, pick},
                                        [](const Delta& a, const Delta& b) { return a.index < b.index; }),
                       Delta{alt, pick});
          out.push_back(std::move(fixed));
        }
      }
      std::sort(out.begin(), out.end());
    }
    return memo_.emplace(std::move(guards), std::move(out)).first->second;
  }

  bool satisfiable(const std::vector<DeltaList>& guards) {
    if (guards.empty()) return true;
    for (const auto& g : guards) {
      if (g.empty()) return false;
    }
    const auto pick = most_frequent(guards);
    for (std::uint8_t alt = 0; alt < kAlternatives; ++alt) {
      if (satisfiable(restrict(guards, pick, alt))) return true;
    }
    return false;
  }

 private:
  static std::uint32_t most_frequent(const std::vector<DeltaList>& guards) {
    std::map<std::uint32_t, std::size_t> occurrences;
    for (const auto& g : guards) {
      for (const auto& d : g) ++occurrences[d.index];
    }
    return std::max_element(occurrences.begin(), occurrences.end(),
                            [](const auto& a, const auto& b) { return a.second < b.second; })
        ->first;
  }

  static std::vector<DeltaList> restrict(const std::vector<DeltaList>& guards, std::uint32_t pick,
                                         std::uint8_t alt) {
    std::vector<DeltaList> next;
    for (const auto& g : guards) {
      auto it = std::find_if(g.begin(), g.end(), [&](const Delta& d) { return d.index == pick; });
      if (it == g.end()) {
        next.push_back(g);
      } else if (it->alternative == alt) {
        next.push_back(without_position(g, static_cast<std::size_t>(it - g.begin())));
      }
    }
    return next;
  }

  std::map<std::vector<DeltaList>, Fragments> memo_;
};

std::vector<DeltaList> checked_guards(const DeltaGraph& graph, std::uint32_t num_indices) {
  auto guards = graph.guards();
  for (const auto& g : guards) {
    if (!g.empty() && g.back().index >= num_indices) {
      throw InternalError("passing_assignments: guard index " + std::to_string(g.back().index) +
                          " outside " + std::to_string(num_indices) + " indices");
    }
  }
  return guards;
}

}  // namespace

std::size_t DeltaGraph::distance(const DeltaList& a, const DeltaList& b) noexcept {
  std::size_t diff = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->index == ib->index) {
      diff += ia->alternative != ib->alternative;
      ++ia;
      ++ib;
    } else if (ia->index < ib->index) {
      ++diff;
      ++ia;
    } else {
      ++diff;
      ++ib;
    }
  }
  return diff + static_cast<std::size_t>(a.end() - ia) + static_cast<std::size_t>(b.end() - ib);
}

bool DeltaGraph::insert(DeltaList guard) {
  for (const auto& [size, layer] : layers_) {
    if (size > guard.size()) break;
    for (const auto& stored : layer) {
      if (guard_subset(stored, guard)) return false;
    }
  }

  std::vector<DeltaList> dominated;
  for (auto it = layers_.lower_bound(guard.size()); it != layers_.end(); ++it) {
    for (const auto& stored : it->second) {
      if (guard_subset(guard, stored)) dominated.push_back(stored);
    }
  }
  for (const auto& d : dominated) erase(d);

  auto& layer = layers_[guard.size()];
  auto& links = edges_[guard];
  for (const auto& other : layer) {
    if (distance(other, guard) == 1) {
      links.insert(other);
      edges_[other].insert(guard);
    }
  }
  layer.insert(std::move(guard));
  return true;
}

void DeltaGraph::erase(const DeltaList& guard) {
  auto layer = layers_.find(guard.size());
  if (layer == layers_.end()) return;
  layer->second.erase(guard);
  if (layer->second.empty()) layers_.erase(layer);
  if (auto links = edges_.find(guard); links != edges_.end()) {
    for (const auto& other : links->second) edges_[other].erase(guard);
    edges_.erase(links);
  }
}

void DeltaGraph::fusion() {
  struct Fusable {
    std::vector<DeltaList> triple;
    DeltaList reduced;
  };
  auto find_triple = [this]() -> std::optional<Fusable> {
    for (auto layer = layers_.rbegin(); layer != layers_.rend(); ++layer) {
      for (const auto& guard : layer->second) {
        const auto& links = neighbours(guard);
        for (std::size_t pos = 0; pos < guard.size(); ++pos) {
          Fusable found{{guard}, without_position(guard, pos)};
          for (std::uint8_t alt = 0; alt < kAlternatives; ++alt) {
            if (alt == guard[pos].alternative) continue;
            auto variant = guard;
            variant[pos].alternative = alt;
            if (links.contains(variant)) found.triple.push_back(std::move(variant));
          }
          if (found.triple.size() == kAlternatives) return found;
        }
      }
    }
    return std::nullopt;
  };

  while (auto found = find_triple()) {
    for (const auto& g : found->triple) erase(g);
    insert(std::move(found->reduced));
  }
}

std::vector<DeltaList> DeltaGraph::guards() const {
  std::vector<DeltaList> out;
  for (const auto& [size, layer] : layers_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::size_t DeltaGraph::size() const noexcept {
  std::size_t n = 0;
  for (const auto& [size, layer] : layers_) n += layer.size();
  return n;
}

bool DeltaGraph::forbids(Assignment assignment) const noexcept {
  for (const auto& [size, layer] : layers_) {
    for (const auto& guard : layer) {
      if (std::all_of(guard.begin(), guard.end(),
                      [&](const Delta& d) { return assignment[d.index] == d.alternative; })) {
        return true;
      }
    }
  }
  return false;
}

const std::set<DeltaList>& DeltaGraph::neighbours(const DeltaList& guard) const {
  static const std::set<DeltaList> none;
  auto it = edges_.find(guard);
  return it == edges_.end() ? none : it->second;
}

ChoiceSet::ChoiceSet(std::uint32_t num_indices, std::vector<DeltaList> fragments)
    : num_indices_(num_indices), fragments_(std::move(fragments)) {}

std::string ChoiceSet::count() const { return total_count(*this).str(); }

bool ChoiceSet::count_exceeds(std::uint64_t limit) const {
  return total_count(*this) > BigCount(limit);
}

bool ChoiceSet::contains(Assignment assignment) const noexcept {
  return std::any_of(fragments_.begin(), fragments_.end(), [&](const DeltaList& frag) {
    return std::all_of(frag.begin(), frag.end(),
                       [&](const Delta& d) { return assignment[d.index] == d.alternative; });
  });
}

void ChoiceSet::for_each(const std::function<void(Assignment)>& visit) const {
  std::vector<std::uint8_t> current(num_indices_, 0);
  std::vector<std::uint32_t> free;
  for (const auto& frag : fragments_) {
    std::vector<bool> fixed(num_indices_, false);
    std::fill(current.begin(), current.end(), 0);
    for (const auto& d : frag) {
      fixed[d.index] = true;
      current[d.index] = d.alternative;
    }
    free.clear();
    for (std::uint32_t i = 0; i < num_indices_; ++i) {
      if (!fixed[i]) free.push_back(i);
    }
    // Odometer over the free indices, last free index varying fastest.
    while (true) {
      visit(current);
      std::size_t k = free.size();
      while (k > 0) {
        auto& slot = current[free[k - 1]];
        if (++slot < kAlternatives) break;
        slot = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
}

std::vector<std::vector<std::uint8_t>> ChoiceSet::expand() const {
  std::vector<std::vector<std::uint8_t>> out;
  for_each([&](Assignment a) { out.emplace_back(a.begin(), a.end()); });
  return out;
}

ChoiceSet passing_assignments(const DeltaGraph& graph, std::uint32_t num_indices) {
  auto guards = checked_guards(graph, num_indices);
  Splitter splitter;
  return ChoiceSet(num_indices, splitter.solve(std::move(guards)));
}

bool has_passing_assignment(const DeltaGraph& graph, std::uint32_t num_indices) {
  if (graph.forbids_everything()) return false;
  return Splitter().satisfiable(checked_guards(graph, num_indices));
}

}  // namespace mwp
