#pragma once

#include <string>

#include "ekrw/family_spec.hpp"
#include "ekrw/numbers.hpp"
#include "ekrw/set_family.hpp"

namespace ekrw {

// Closed-form counts of the named constructions.  These accept slightly
// relaxed parameter ranges (they are plain binomial expressions); strict
// range validation lives in FamilySpec::validate.
BigCount count_a(long n, long k, long d);
BigCount count_h(long n, long k, long d);
BigCount count_m(long n, long k, long d, long r);
BigCount count_t(long n, long k, long d, long r);
BigCount count_star(long n, long k, long t);
BigCount count_frankl_uniform(long n, long k, long t, long i);
BigCount count_frankl_nonuniform(long n, long d, long t, long i);

/// |build(spec)| via the closed forms; validates the spec first.
BigCount count_construction(const FamilySpec& spec);

enum class BoundId {
  HiltonMilner,         // C(n-1,k-1) - C(n-k-1,k-1) + 1
  EkrTIntersecting,     // C(n-t,k-t)
  FranklTIntersecting,  // C(n-1,k-t)
  MissingIntersection,  // C(n,k-l-1)
};

struct BoundParams {
  long n = 0;
  long k = 0;
  long t = 0;  // EkrTIntersecting, FranklTIntersecting
  long l = 0;  // MissingIntersection
};

/// Evaluates the named bound expression; no range checking (the range
/// conditions are classified separately in thresholds).
BigCount bound_value(BoundId id, const BoundParams& params);

BoundId bound_id_from_string(const std::string& name);  // HM, EKR, FranklUB, KMW
std::string bound_id_name(BoundId id);

/// Exact product measure: sum of p^|F| (1-p)^(n-|F|) over members.
/// Requires 0 < p < 1.
Rational mu_p(const SetFamily& family, const Rational& p);

struct ExtremalReport {
  long n = 0, k = 0, d = 0;
  BigCount a_count;
  BigCount h_count;
  BigCount m_count;  // max over r of |M(n,k,d,r)|
  long m_r = 0;      // maximizing r (ties toward smaller r)
  BigCount t_count;  // max over r of |T(n,k,d,r)|
  long t_r = 0;

  BigCount best() const {
    BigCount out = a_count;
    if (h_count > out) out = h_count;
    if (m_count > out) out = m_count;
    if (t_count > out) out = t_count;
    return out;
  }
};

/// All four counts via closed forms; requires 2 <= d < k < n.
ExtremalReport extremal_report(long n, long k, long d);

}  // namespace ekrw
