#include "ekrw/counting.hpp"

#include <map>
#include <stdexcept>

namespace ekrw {

BigCount count_a(long n, long k, long d) {
  // Members meet [d+1] in d elements (d+1 choices of the missing one) or
  // contain it entirely.
  return binomial(n - d - 1, k - d - 1) + (d + 1) * binomial(n - d - 1, k - d);
}

BigCount count_h(long n, long k, long d) {
  // Sets through [d-1] minus those avoiding [d,k+1], plus the d-1 deleted
  // element sets [k+1] \ {i}.
  return binomial(n - d + 1, k - d + 1) - binomial(n - k - 1, k - d + 1) + (d - 1);
}

BigCount count_m(long n, long k, long d, long r) {
  const long w = (d - 1) * r + 1;       // window [2, 2+(d-1)r]
  const long q = 1 + (d - 2) * r;       // window quota
  BigCount total = 0;
  for (long j = q; j <= w && j <= k - 1; ++j)
    total += binomial(w, j) * binomial(n - 1 - w, k - 1 - j);
  total += binomial(n - 1 - w, k - w);  // window supersets avoiding element 1
  return total;
}

BigCount count_t(long n, long k, long d, long r) {
  const long w = k + 1 - r;  // window [r+1, k+1]
  const long j0 = (d - r - 1) * (k - r + 1) / (d - r) + 1;
  BigCount total = 0;
  for (long j = j0; j <= w && j <= k - r; ++j)
    total += binomial(w, j) * binomial(n - k - 1, k - r - j);
  total += r;  // deleted-element sets [k+1] \ {i}, i in [r]
  return total;
}

BigCount count_star(long n, long k, long t) { return binomial(n - t, k - t); }

BigCount count_frankl_uniform(long n, long k, long t, long i) {
  const long w = t + 2 * i;
  const long q = t + i;
  BigCount total = 0;
  for (long j = q; j <= w && j <= k; ++j)
    total += binomial(w, j) * binomial(n - w, k - j);
  return total;
}

BigCount count_frankl_nonuniform(long n, long d, long t, long i) {
  const long w = t + d * i;
  const long q = t + (d - 1) * i;
  BigCount window_ways = 0;
  for (long j = q; j <= w; ++j) window_ways += binomial(w, j);
  return window_ways * pow2(static_cast<unsigned long>(n - w));
}

BigCount count_construction(const FamilySpec& spec) {
  spec.validate();
  switch (spec.variant) {
    case FamilyVariant::A: return count_a(spec.n, spec.k, spec.d);
    case FamilyVariant::H: return count_h(spec.n, spec.k, spec.d);
    case FamilyVariant::M: return count_m(spec.n, spec.k, spec.d, spec.r);
    case FamilyVariant::T: return count_t(spec.n, spec.k, spec.d, spec.r);
    case FamilyVariant::Star: return count_star(spec.n, spec.k, spec.t);
    case FamilyVariant::FranklUniform:
      return count_frankl_uniform(spec.n, spec.k, spec.t, spec.i);
    case FamilyVariant::FranklNonuniform:
      return count_frankl_nonuniform(spec.n, spec.d, spec.t, spec.i);
  }
  throw std::logic_error("unreachable");
}

BigCount bound_value(BoundId id, const BoundParams& p) {
  switch (id) {
    case BoundId::HiltonMilner:
      return binomial(p.n - 1, p.k - 1) - binomial(p.n - p.k - 1, p.k - 1) + 1;
    case BoundId::EkrTIntersecting:
      return binomial(p.n - p.t, p.k - p.t);
    case BoundId::FranklTIntersecting:
      return binomial(p.n - 1, p.k - p.t);
    case BoundId::MissingIntersection:
      return binomial(p.n, p.k - p.l - 1);
  }
  throw std::invalid_argument("unknown bound id");
}

BoundId bound_id_from_string(const std::string& name) {
  if (name == "HM") return BoundId::HiltonMilner;
  if (name == "EKR") return BoundId::EkrTIntersecting;
  if (name == "FranklUB") return BoundId::FranklTIntersecting;
  if (name == "KMW") return BoundId::MissingIntersection;
  throw std::invalid_argument("unknown bound id: " + name);
}

std::string bound_id_name(BoundId id) {
  switch (id) {
    case BoundId::HiltonMilner: return "HM";
    case BoundId::EkrTIntersecting: return "EKR";
    case BoundId::FranklTIntersecting: return "FranklUB";
    case BoundId::MissingIntersection: return "KMW";
  }
  return "?";
}

Rational mu_p(const SetFamily& family, const Rational& p) {
  if (!(p > 0 && p < 1)) throw std::domain_error("mu_p requires 0 < p < 1");
  const int n = family.ground_size();
  // Group members by cardinality; one power computation per size.
  std::map<int, long> size_counts;
  for (const ElementSet& s : family.members()) ++size_counts[s.size()];
  const Rational q = Rational(1) - p;
  Rational total = 0;
  for (const auto& [size, count] : size_counts) {
    total += count * rational_pow(p, static_cast<unsigned long>(size)) *
             rational_pow(q, static_cast<unsigned long>(n - size));
  }
  total.canonicalize();
  return total;
}

ExtremalReport extremal_report(long n, long k, long d) {
  if (!(2 <= d && d < k && k < n))
    throw std::invalid_argument("extremal_report requires 2 <= d < k < n");
  ExtremalReport rep;
  rep.n = n;
  rep.k = k;
  rep.d = d;
  rep.a_count = count_a(n, k, d);
  rep.h_count = count_h(n, k, d);
  // n >= k+1 and (d-1)r <= k-1 together give n >= 2+(d-1)r for every r here.
  const long m_r_max = (k - 1) / (d - 1);
  for (long r = 1; r <= m_r_max; ++r) {
    BigCount c = count_m(n, k, d, r);
    if (r == 1 || c > rep.m_count) {
      rep.m_count = c;
      rep.m_r = r;
    }
  }
  for (long r = 0; r <= d - 1 && r <= k; ++r) {
    BigCount c = count_t(n, k, d, r);
    if (r == 0 || c > rep.t_count) {
      rep.t_count = c;
      rep.t_r = r;
    }
  }
  return rep;
}

}  // namespace ekrw
