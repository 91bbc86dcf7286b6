#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "ekrw/element_set.hpp"
#include "ekrw/set_family.hpp"

namespace ekrw {

/// Explicit-enumeration paths are capped here; counting paths have no cap.
inline constexpr int kEnumerationLimit = 28;

inline void check_enumeration_ground(int n) {
  if (n < 1) throw std::invalid_argument("ground size must be >= 1");
  if (n > kEnumerationLimit)
    throw std::invalid_argument("enumeration limit: ground size must be <= 28");
}

/// Visits all C(n,k) k-subsets of [n] in strictly increasing mask order.
/// The callback may return bool (false stops the walk) or void.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  check_enumeration_ground(n);
  if (k < 0 || k > n) throw std::invalid_argument("k outside [0,n]");
  auto visit = [&](const ElementSet& s) -> bool {
    if constexpr (std::is_invocable_r_v<bool, Fn, const ElementSet&>) {
      return fn(s);
    } else {
      fn(s);
      return true;
    }
  };
  if (k == 0) {
    visit(ElementSet(n));  // single empty set
    return;
  }
  const std::uint64_t top = std::uint64_t{1} << n;
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  while (mask < top) {
    if (!visit(ElementSet::from_words(n, mask))) return;
    // Gosper's hack: next mask with the same popcount.
    std::uint64_t c = mask & -mask;
    std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

inline std::vector<ElementSet> k_subsets(int n, int k) {
  std::vector<ElementSet> out;
  for_each_k_subset(n, k, [&](const ElementSet& s) { out.push_back(s); });
  return out;
}

/// Visits all 2^n subsets of [n] in increasing mask order.
template <typename Fn>
void for_each_subset(int n, Fn&& fn) {
  check_enumeration_ground(n);
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    ElementSet s = ElementSet::from_words(n, mask);
    if constexpr (std::is_invocable_r_v<bool, Fn, const ElementSet&>) {
      if (!fn(s)) return;
    } else {
      fn(s);
    }
  }
}

/// Bitwise intersection of a nonempty sequence of sets over one ground set.
inline ElementSet intersect_all(std::span<const ElementSet> sets) {
  if (sets.empty()) throw std::invalid_argument("empty intersection undefined");
  ElementSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc &= sets[i];
  return acc;
}

}  // namespace ekrw
