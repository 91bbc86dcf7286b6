#include "ekrw/forbidden.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ekrw {
namespace {

void check_kl(long k, long l) {
  if (l < 0 || 2 * l >= k)
    throw std::invalid_argument("requires 0 <= 2l < k");
}

long legendre_nu(long p, long l) {
  // Exponent of p in l!.
  long nu = 0;
  for (long q = p; q <= l; q *= p) {
    nu += l / q;
    if (q > l / p) break;  // avoid overflow on the next multiply
  }
  return nu;
}

BigInt factorial(long l) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(l));
  return f;
}

}  // namespace

BigInt kmw_poly_value(long i, long k, long l) {
  check_kl(k, l);
  if (i < 0 || i > k) throw std::invalid_argument("requires 0 <= i <= k");
  return binomial_signed(i - l - 1, k - l - 1);
}

DividesResult divides_factorial(long m, long l) {
  if (m < 1 || l < 0) throw std::invalid_argument("requires m >= 1, l >= 0");
  DividesResult out;
  BigInt lfac = factorial(l);
  out.divides = mpz_divisible_p(lfac.get_mpz_t(), BigInt(m).get_mpz_t()) != 0;
  if (out.divides) return out;
  // Find a prime power p^a dividing m with nu_p(l!) < a, by trial division.
  long rest = m;
  for (long p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;  // the remaining factor is prime
    if (rest % p != 0) continue;
    long e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    long nu = legendre_nu(p, l);
    if (nu < e) {
      FactorWitness w{p, nu + 1};
      // Re-verify arithmetically: p^a | m and p^a does not divide l!.
      BigInt pa = ipow(BigInt(p), static_cast<unsigned long>(w.a));
      if (mpz_divisible_p(BigInt(m).get_mpz_t(), pa.get_mpz_t()) == 0 ||
          mpz_divisible_p(lfac.get_mpz_t(), pa.get_mpz_t()) != 0)
        throw std::logic_error("factor witness verification failed");
      out.witness = w;
      return out;
    }
  }
  throw std::logic_error("m does not divide l! but no witness found");
}

BigCount KmwCertificate::bound(long n) const { return binomial(n, k - l - 1); }

std::optional<KmwCertificate> kmw_certificate(long k, long l) {
  check_kl(k, l);
  DividesResult div = divides_factorial(k - l, l);
  if (div.divides) return std::nullopt;  // condition fails: k-l | l!

  KmwCertificate cert;
  cert.k = k;
  cert.l = l;
  cert.p = div.witness->p;
  cert.a = div.witness->a;
  cert.degree = k - l - 1;
  cert.residues.resize(static_cast<std::size_t>(k + 1));
  const BigInt p(cert.p);
  for (long i = 0; i <= k; ++i) {
    BigInt v = kmw_poly_value(i, k, l);
    BigInt r = v % p;
    if (r < 0) r += p;
    cert.residues[static_cast<std::size_t>(i)] = static_cast<long>(r.get_si());
    // Certificate conditions, checked numerically as we go.
    if (i >= l + 1 && i <= k - 1 && v != 0)
      throw std::logic_error("polynomial not identically zero on (l,k)");
    if (i <= l - 1 && r != 0)
      throw std::logic_error("polynomial residue nonzero below l");
  }
  if (cert.residues[static_cast<std::size_t>(k)] == 0)
    throw std::logic_error("f(k) vanishes mod p");
  return cert;
}

SmallLReport small_l_guarantee(long k) {
  SmallLReport out;
  out.k = k;
  if (k < 16) {
    out.guarded = true;  // log log k <= 1: the cutoff is not meaningful
    return out;
  }
  // Outward interval for log(k)/log(log(k)) so the guarantee is never
  // claimed for a borderline l.  Doubles give ~1e-16 relative error; a
  // 1e-12 relative margin is far beyond it.
  const double rel = 1e-12;
  const double logk = std::log(static_cast<double>(k));
  const double logk_lo = logk * (1 - rel);
  const double logk_hi = logk * (1 + rel);
  const double loglogk_lo = std::log(logk_lo) * (1 - rel);
  const double loglogk_hi = std::log(logk_hi) * (1 + rel);
  const double cutoff_lo = logk_lo / loglogk_hi;

  for (long l = 0; l < cutoff_lo && 2 * l < k; ++l) {
    out.max_l = l;
    if (kmw_certificate(k, l))
      out.certified.push_back(l);
    else
      out.failures.push_back(l);
  }
  return out;
}

bool LPredicate::allows(long s) const {
  switch (kind) {
    case Kind::Explicit:
      return std::find(values.begin(), values.end(), s) != values.end();
    case Kind::NotEqual:
      return s != l;
    case Kind::NotCongruent:
      return ((k - s) % q) != 0;  // s not congruent to k mod q
  }
  return false;
}

LPredicate LPredicate::explicit_set(std::vector<long> values) {
  LPredicate p;
  p.kind = Kind::Explicit;
  p.values = std::move(values);
  return p;
}

LPredicate LPredicate::not_equal(long l) {
  LPredicate p;
  p.kind = Kind::NotEqual;
  p.l = l;
  return p;
}

LPredicate LPredicate::not_congruent(long k, long q) {
  if (q < 2) throw std::invalid_argument("modulus must be >= 2");
  LPredicate p;
  p.kind = Kind::NotCongruent;
  p.k = k;
  p.q = q;
  return p;
}

LSystemResult verify_L_system(const SetFamily& family, const LPredicate& allowed) {
  if (!family.uniform_size())
    throw std::invalid_argument("L-system check requires a uniform family");
  LSystemResult out;
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      int s = members[i].intersection_size(members[j]);
      if (!allowed.allows(s)) {
        out.ok = false;
        out.violating_pair = {members[i], members[j]};
        out.intersection_size = s;
        return out;
      }
    }
  }
  return out;
}

}  // namespace ekrw
