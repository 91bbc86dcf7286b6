#pragma once

#include <optional>
#include <vector>

#include "ekrw/set_family.hpp"

namespace ekrw {

/// Evidence for a failed intersection property: the offending member sets
/// and their intersection size.  Re-evaluating the witness reproduces the
/// violation.
struct ViolationWitness {
  enum class Kind { Tuple, Triviality, Lemma };
  Kind kind = Kind::Tuple;
  std::vector<ElementSet> sets;
  int intersection_size = 0;
};

struct CheckResult {
  bool ok = true;
  std::optional<ViolationWitness> witness;
  explicit operator bool() const { return ok; }
};

/// Every d distinct members intersect in >= t elements.  Families with
/// fewer than d members are checked through all available subsets, which
/// reduces to the full intersection (vacuously true when empty).  The DFS
/// over member subsets abandons a branch as soon as the partial
/// intersection drops below t; the returned witness is the first violating
/// d-subset in lexicographic order.
CheckResult is_d_wise_t_intersecting(const SetFamily& family, int d, int t);

/// |intersection of all members| < t.  Throws on the empty family.
bool is_nontrivial(const SetFamily& family, int t);

/// For every m in 1..d and every m-subset, the intersection has at least
/// t+d-m elements.  Requires the family to be a nontrivial d-wise
/// t-intersecting family; throws "lemma hypothesis fails" otherwise.
CheckResult check_m_wise_lemma(const SetFamily& family, int d, int t);

/// Reference implementation without pruning, for cross-checking: walks
/// every d-subset outright.
CheckResult is_d_wise_t_intersecting_naive(const SetFamily& family, int d, int t);

}  // namespace ekrw
