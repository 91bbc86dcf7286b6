#pragma once

#include <optional>
#include <vector>

#include "ekrw/set_family.hpp"

namespace ekrw {

/// Canonical relabeling limit; the backtracking canonicalizer refuses
/// larger ground sets.
inline constexpr int kCanonicalLimit = 16;

struct CanonicalResult {
  SetFamily canonical;
  /// permutation[i-1] is the canonical label of original element i.
  std::vector<int> permutation;
};

/// Permutation-invariant canonical form: canonical_form(pi . F) equals
/// canonical_form(F) for every relabeling pi.  Elements are first split
/// into cells by iterated signature refinement (degree, then co-degree
/// multisets); the residual symmetry is resolved by backtracking that
/// builds the lexicographically least member sequence, skipping choices
/// equivalent under detected within-cell symmetries.
CanonicalResult canonical_form(const SetFamily& family);

/// Witness permutation pi with pi . a == b, if one exists.  Both families
/// must share the ground size.
std::optional<std::vector<int>> are_isomorphic(const SetFamily& a,
                                               const SetFamily& b);

/// All-permutations reference for tests; n <= 8.
CanonicalResult canonical_form_brute(const SetFamily& family);

}  // namespace ekrw
