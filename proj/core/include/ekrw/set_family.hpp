#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ekrw/element_set.hpp"

namespace ekrw {

/// An ordered, duplicate-free collection of subsets of [n].  Members are
/// kept strictly increasing in numeric mask order; that order is the
/// tie-breaking order for every deterministic output of the library.
/// When a uniform size k is declared, every member must have exactly k
/// elements.
class SetFamily {
 public:
  struct BuildStats {
    bool reordered = false;
    bool deduplicated = false;
  };

  /// Empty family over the one-element ground set; placeholder value for
  /// default-constructed results.
  SetFamily() : n_(1) {}

  explicit SetFamily(int n, std::optional<int> k = std::nullopt)
      : n_(n), k_(k) {
    if (n < 1 || n > ElementSet::kMaxGround)
      throw std::out_of_range("ground size must be in [1,128]");
    if (k && (*k < 0 || *k > n))
      throw std::invalid_argument("uniform size k outside [0,n]");
  }

  /// Sorts and de-duplicates; stats report whether input needed fixing.
  static SetFamily from_members(int n, std::optional<int> k,
                                std::vector<ElementSet> members,
                                BuildStats* stats = nullptr) {
    SetFamily f(n, k);
    for (const ElementSet& s : members) {
      if (s.ground_size() != n)
        throw std::invalid_argument("member ground size differs from family");
      if (k && s.size() != *k)
        throw std::invalid_argument("member cardinality differs from declared k");
    }
    bool sorted = std::is_sorted(members.begin(), members.end());
    if (!sorted) std::sort(members.begin(), members.end());
    auto last = std::unique(members.begin(), members.end());
    bool deduped = last != members.end();
    members.erase(last, members.end());
    if (stats) {
      stats->reordered = !sorted;
      stats->deduplicated = deduped;
    }
    f.members_ = std::move(members);
    return f;
  }

  /// Members must already be strictly increasing; used by enumeration
  /// paths that produce mask order for free.
  static SetFamily from_sorted_unique(int n, std::optional<int> k,
                                      std::vector<ElementSet> members) {
    SetFamily f(n, k);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i].ground_size() != n)
        throw std::invalid_argument("member ground size differs from family");
      if (k && members[i].size() != *k)
        throw std::invalid_argument("member cardinality differs from declared k");
      if (i > 0 && !(members[i - 1] < members[i]))
        throw std::invalid_argument("members not strictly increasing");
    }
    f.members_ = std::move(members);
    return f;
  }

  int ground_size() const { return n_; }
  std::optional<int> uniform_size() const { return k_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  const std::vector<ElementSet>& members() const { return members_; }
  const ElementSet& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const ElementSet& s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
  }

  /// Intersection of all members; empty family has no global intersection.
  std::optional<ElementSet> global_intersection() const {
    if (members_.empty()) return std::nullopt;
    ElementSet acc = members_.front();
    for (std::size_t i = 1; i < members_.size(); ++i) acc &= members_[i];
    return acc;
  }

  /// Relabel every member through a permutation of [n] (re-sorted).
  SetFamily permuted(std::span<const int> perm) const {
    std::vector<ElementSet> out;
    out.reserve(members_.size());
    for (const ElementSet& s : members_) out.push_back(s.permuted(perm));
    std::sort(out.begin(), out.end());
    SetFamily f(n_, k_);
    f.members_ = std::move(out);
    return f;
  }

  bool operator==(const SetFamily& o) const {
    return n_ == o.n_ && members_ == o.members_;
  }

 private:
  int n_;
  std::optional<int> k_;
  std::vector<ElementSet> members_;
};

}  // namespace ekrw
