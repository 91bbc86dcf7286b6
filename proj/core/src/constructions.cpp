#include "ekrw/constructions.hpp"

#include <stdexcept>

#include "ekrw/subsets.hpp"

namespace ekrw {

SetFamily build(const FamilySpec& spec) {
  spec.validate();
  check_enumeration_ground(spec.n);
  std::vector<ElementSet> members;
  if (spec.is_uniform()) {
    for_each_k_subset(spec.n, spec.k, [&](const ElementSet& s) {
      if (spec.membership(s)) members.push_back(s);
    });
    return SetFamily::from_sorted_unique(spec.n, spec.k, std::move(members));
  }
  for_each_subset(spec.n, [&](const ElementSet& s) {
    if (spec.membership(s)) members.push_back(s);
  });
  return SetFamily::from_sorted_unique(spec.n, std::nullopt, std::move(members));
}

namespace {

ArgmaxResult argmax_common(long n, const FamilySpec& best_spec, const BigCount& best_count) {
  ArgmaxResult out;
  out.r = best_spec.r;
  out.count = best_count;
  if (n <= kEnumerationLimit) out.family = build(best_spec);
  return out;
}

}  // namespace

ArgmaxResult mkd_argmax(long n, long k, long d) {
  if (d < 2 || k < d || n < k + 1)
    throw std::invalid_argument("mkd_argmax requires d >= 2, k >= d, n >= k+1");
  std::optional<FamilySpec> best;
  BigCount best_count;
  const long r_max = (k - 1) / (d - 1);
  for (long r = 1; r <= r_max; ++r) {
    FamilySpec spec = FamilySpec::m(static_cast<int>(n), static_cast<int>(k),
                                    static_cast<int>(d), static_cast<int>(r));
    spec.validate();
    BigCount c = count_construction(spec);
    if (!best || c > best_count) {
      best = spec;
      best_count = c;
    }
  }
  if (!best) throw std::invalid_argument("no valid r for M(n,k,d,r)");
  return argmax_common(n, *best, best_count);
}

ArgmaxResult tkd_argmax(long n, long k, long d) {
  if (d < 2 || n < k + 1)
    throw std::invalid_argument("tkd_argmax requires d >= 2, n >= k+1");
  std::optional<FamilySpec> best;
  BigCount best_count;
  for (long r = 0; r <= d - 1 && r <= k; ++r) {
    FamilySpec spec = FamilySpec::tt(static_cast<int>(n), static_cast<int>(k),
                                     static_cast<int>(d), static_cast<int>(r));
    spec.validate();
    BigCount c = count_construction(spec);
    if (!best || c > best_count) {
      best = spec;
      best_count = c;
    }
  }
  if (!best) throw std::invalid_argument("no valid r for T(n,k,d,r)");
  return argmax_common(n, *best, best_count);
}

}  // namespace ekrw
