#pragma once

#include <optional>

#include "ekrw/counting.hpp"
#include "ekrw/family_spec.hpp"
#include "ekrw/set_family.hpp"

namespace ekrw {

/// Materializes the family described by spec by filtering the k-subset
/// enumeration (all subsets for the nonuniform variant).  Requires
/// n <= 28 (enumeration guard).
SetFamily build(const FamilySpec& spec);

/// Membership predicate re-exported at the construction level.
inline bool membership(const FamilySpec& spec, const ElementSet& s) {
  return spec.membership(s);
}

struct ArgmaxResult {
  long r = 0;
  BigCount count;
  std::optional<SetFamily> family;  // materialized when n <= 28
};

/// r maximizing |M(n,k,d,r)| over 1 <= r <= floor((k-1)/(d-1)), ties toward
/// smaller r.  Counting is closed-form, so this works far beyond the
/// enumeration cap; the family is attached only when n <= 28.
ArgmaxResult mkd_argmax(long n, long k, long d);

/// r maximizing |T(n,k,d,r)| over 0 <= r <= d-1, ties toward smaller r.
ArgmaxResult tkd_argmax(long n, long k, long d);

}  // namespace ekrw
