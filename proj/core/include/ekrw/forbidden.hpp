#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ekrw/numbers.hpp"
#include "ekrw/set_family.hpp"

namespace ekrw {

/// f(i) = C(i-l-1, k-l-1) as a degree k-l-1 integer polynomial in i;
/// zero for l+1 <= i <= k-1 and 1 at i = k.  Requires 0 <= i <= k, 0 <= 2l < k.
BigInt kmw_poly_value(long i, long k, long l);

struct FactorWitness {
  long p = 0;  // prime
  long a = 0;  // exponent: p^a | m but p^a does not divide l!
};

struct DividesResult {
  bool divides = false;
  std::optional<FactorWitness> witness;  // present when !divides
};

/// Does m divide l! ?  On failure returns a prime-power witness found via
/// Legendre's formula, re-verified arithmetically before returning.
DividesResult divides_factorial(long m, long l);

/// Certificate that the polynomial f vanishes mod p on [0,k-1] \ {l} while
/// f(k) is a unit: the hypotheses needed to bound a family avoiding
/// pairwise intersection size l by C(n, k-l-1).
struct KmwCertificate {
  long k = 0, l = 0;
  long p = 0;  // prime
  long a = 0;  // p^a | (k-l), p^a does not divide l!
  long degree = 0;            // k-l-1
  std::vector<long> residues;  // residues[i] = f(i) mod p, i in [0,k]

  BigCount bound(long n) const;  // C(n, k-l-1)
};

/// Builds and numerically verifies the certificate; nullopt when k-l
/// divides l! (the divisibility condition fails).  Requires 0 <= 2l < k.
std::optional<KmwCertificate> kmw_certificate(long k, long l);

struct SmallLReport {
  long k = 0;
  bool guarded = false;      // k < 16: cutoff undefined, no claim made
  long max_l = -1;           // largest l strictly below log k / log log k
  std::vector<long> certified;  // l values with certificates
  std::vector<long> failures;   // l values below the cutoff lacking one
};

/// Outward-rounded interval evaluation of log k / log log k; every l
/// strictly below the interval is checked to yield a certificate.
SmallLReport small_l_guarantee(long k);

/// Allowed pairwise intersection sizes, given explicitly or as the
/// predicates "!= l" and "not congruent to k mod q".
struct LPredicate {
  enum class Kind { Explicit, NotEqual, NotCongruent };
  Kind kind = Kind::Explicit;
  std::vector<long> values;  // Explicit
  long l = 0;                // NotEqual
  long k = 0, q = 0;         // NotCongruent

  bool allows(long intersection_size) const;

  static LPredicate explicit_set(std::vector<long> values);
  static LPredicate not_equal(long l);
  static LPredicate not_congruent(long k, long q);
};

struct LSystemResult {
  bool ok = true;
  std::optional<std::pair<ElementSet, ElementSet>> violating_pair;
  int intersection_size = 0;
};

/// Checks |F cap F'| in L for all distinct members of a uniform family.
LSystemResult verify_L_system(const SetFamily& family, const LPredicate& allowed);

}  // namespace ekrw
