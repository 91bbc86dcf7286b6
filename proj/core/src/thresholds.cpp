#include "ekrw/thresholds.hpp"

#include <stdexcept>

#include "ekrw/counting.hpp"

namespace ekrw {

int beta_poly_sign(int t, int d, const Rational& x) {
  // (1-x)^(t+d-3) - x^(d-2) at x = p/q has the sign of
  // (q-p)^(t+d-3) q^(d-2) - p^(d-2) q^(t+d-3).
  const BigInt p = x.get_num();
  const BigInt q = x.get_den();
  const unsigned long e1 = static_cast<unsigned long>(t + d - 3);
  const unsigned long e2 = static_cast<unsigned long>(d - 2);
  BigInt lhs = ipow(q - p, e1) * ipow(q, e2);
  BigInt rhs = ipow(p, e2) * ipow(q, e1);
  return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

BetaBracket beta(int t, int d, const Rational& tol) {
  if (t < 2 || d < 3) throw std::invalid_argument("beta requires t >= 2, d >= 3");
  if (!(tol > 0)) throw std::invalid_argument("beta requires tol > 0");
  Rational lo(1, t + 1);
  Rational hi(1, 2);
  if (beta_poly_sign(t, d, lo) <= 0)
    throw std::logic_error("beta: positive sign expected at 1/(t+1)");
  if (beta_poly_sign(t, d, hi) >= 0)
    throw std::logic_error("beta: negative sign expected at 1/2");
  const Rational lo_start = lo;
  // The polynomial is strictly decreasing on (0,1), so the sign test never
  // sees an ambiguous bracket.  Keep halving until the width fits and the
  // lower end has moved strictly above 1/(t+1).
  while (hi - lo > tol || lo == lo_start) {
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    int s = beta_poly_sign(t, d, mid);
    if (s == 0) {
      // Exact rational root: nudge an exact bracket around it.
      Rational h = tol / 2;
      Rational new_lo = mid - h;
      Rational new_hi = mid + h;
      if (new_lo <= lo_start) new_lo = (lo_start + mid) / 2;
      if (new_hi >= Rational(1, 2)) new_hi = (mid + Rational(1, 2)) / 2;
      lo = new_lo;
      hi = new_hi;
      if (beta_poly_sign(t, d, lo) <= 0 || beta_poly_sign(t, d, hi) >= 0)
        throw std::logic_error("beta: bracket repair failed");
      break;
    }
    if (s > 0)
      lo = mid;
    else
      hi = mid;
  }
  BetaBracket b;
  b.t = t;
  b.d = d;
  b.lo = lo;
  b.hi = hi;
  b.tol = tol;
  return b;
}

std::string theorem_range_id(TheoremRange id) {
  switch (id) {
    case TheoremRange::NontrivialDWise: return "Thm1.4";
    case TheoremRange::NontrivialDWiseT: return "Thm1.5";
    case TheoremRange::NontrivialTSmallK: return "Thm1.6(i)";
    case TheoremRange::NontrivialTLargeK: return "Thm1.6(ii)";
    case TheoremRange::CompleteIntersection: return "Thm1.7";
    case TheoremRange::DWiseTStar: return "Thm1.8";
    case TheoremRange::TIntersectingStar: return "Thm3.1";
    case TheoremRange::TIntersectingWeak: return "Thm3.2";
  }
  return "?";
}

namespace {

BigCount max_ah(long n, long k, long d) {
  BigCount a = count_a(n, k, d);
  BigCount h = count_h(n, k, d);
  return a >= h ? a : h;
}

Rational ratio(long num, long den) {
  Rational q{BigInt(num), BigInt(den)};
  q.canonicalize();
  return q;
}

}  // namespace

RangeClassification classify_range(long n, long k, long d, long t) {
  RangeClassification out;
  out.n = n;
  out.k = k;
  out.d = d;
  out.t = t;

  auto& s14 = out.status[static_cast<std::size_t>(TheoremRange::NontrivialDWise)];
  s14.threshold = ratio(2 + d, 2) * Rational(k - d + 2);
  s14.bound_expr = "max{|H(n,k,d)|,|A(n,k,d)|}";
  if (t == 1 && 2 <= d && d < k && Rational(n) > s14.threshold) {
    s14.applies = true;
    s14.bound = max_ah(n, k, d);
  }

  auto& s15 = out.status[static_cast<std::size_t>(TheoremRange::NontrivialDWiseT)];
  s15.threshold = ratio(t + d + 1, 2) * Rational(k - t - d + 3);
  s15.bound_expr = "max{|H(n,k,t+d-1)|,|A(n,k,t+d-1)|}";
  if (d >= 2 && t >= 1 && k >= t + d - 1 && Rational(n) > s15.threshold) {
    s15.applies = true;
    s15.bound = max_ah(n, k, t + d - 1);
  }

  // Nontrivial t-intersecting complete theorem, n > (t+1)(k-t+1).
  auto& s16i = out.status[static_cast<std::size_t>(TheoremRange::NontrivialTSmallK)];
  s16i.threshold = Rational((t + 1) * (k - t + 1));
  s16i.bound_expr = "|A(n,k,t+1)|";
  if (t >= 1 && k >= t && Rational(n) > s16i.threshold && k <= 2 * t + 1) {
    s16i.applies = true;
    s16i.bound = count_a(n, k, t + 1);
  }

  auto& s16ii = out.status[static_cast<std::size_t>(TheoremRange::NontrivialTLargeK)];
  s16ii.threshold = s16i.threshold;
  s16ii.bound_expr = "max{|A(n,k,t+1)|,|H(n,k,t+1)|}";
  if (t >= 1 && Rational(n) > s16ii.threshold && k > 2 * t + 1) {
    s16ii.applies = true;
    s16ii.bound = max_ah(n, k, t + 1);
  }

  // Complete intersection window (k-t+1)(2+(t-1)/2) < n < (k-t-1)(t+1).
  auto& s17 = out.status[static_cast<std::size_t>(TheoremRange::CompleteIntersection)];
  s17.threshold = Rational(k - t + 1) * (Rational(2) + ratio(t - 1, 2));
  s17.window_hi = Rational((k - t - 1) * (t + 1));
  s17.bound_expr = "|A(n,k,t+1)|";
  if (t >= 1 && k >= t && Rational(n) > s17.threshold && Rational(n) < *s17.window_hi) {
    s17.applies = true;
    s17.bound = count_a(n, k, t + 1);
  }

  auto& s18 = out.status[static_cast<std::size_t>(TheoremRange::DWiseTStar)];
  s18.threshold = Rational((t + d - 1) * (k - t - d + 3));
  s18.bound_expr = "C(n-t,k-t)";
  if (d >= 2 && t >= 1 && k >= t && Rational(n) > s18.threshold) {
    s18.applies = true;
    s18.bound = binomial(n - t, k - t);
  }

  auto& s31 = out.status[static_cast<std::size_t>(TheoremRange::TIntersectingStar)];
  s31.threshold = Rational((t + 1) * (k - t + 1));
  s31.bound_expr = "C(n-t,k-t)";
  if (t >= 1 && k >= t && Rational(n) >= s31.threshold) {
    s31.applies = true;
    s31.bound = binomial(n - t, k - t);
  }

  auto& s32 = out.status[static_cast<std::size_t>(TheoremRange::TIntersectingWeak)];
  s32.threshold = Rational(2 * k - t + 1);
  s32.bound_expr = "C(n-1,k-t)";
  if (t >= 1 && k >= t && Rational(n) >= s32.threshold) {
    s32.applies = true;
    s32.bound = binomial(n - 1, k - t);
  }

  return out;
}

bool lemma33_holds(long n, long k, long t, long d) {
  if (k < t + d - 2 || n <= k)
    throw std::invalid_argument("lemma33 requires k >= t+d-2 and n > k");
  bool binomial_side = binomial(n - t, k - t) > binomial(n - 1, k - t - d + 2);
  bool product_side = lemma33_product_holds(n, k, t, d);
  if (binomial_side != product_side)
    throw std::logic_error("lemma33 formulations disagree");
  return binomial_side;
}

bool lemma33_product_holds(long n, long k, long t, long d) {
  // (n-k+t+d-3)...(n-k+1)  >  (n-1)...(n-t+1) * (k-t)...(k-t-d+3)
  BigInt lhs = 1;
  for (long v = n - k + 1; v <= n - k + t + d - 3; ++v) lhs *= v;
  BigInt rhs = 1;
  for (long v = n - t + 1; v <= n - 1; ++v) rhs *= v;
  for (long v = k - t - d + 3; v <= k - t; ++v) rhs *= v;
  return lhs > rhs;
}

ScanResult scan_n0(const Rational& p, long t, long d, long n_max) {
  if (!(p > 0) || !(p < Rational(1, 2)))
    throw std::invalid_argument("scan_n0 requires 0 < p < 1/2");
  if (n_max > 100000) throw std::invalid_argument("scan_n0 requires n_max <= 1e5");
  const long den = static_cast<long>(p.get_den().get_si());
  const long num = static_cast<long>(p.get_num().get_si());
  ScanResult out;
  long last_point = 0;
  for (long n = den; n <= n_max; n += den) {
    const long k = num * (n / den);
    if (k < t + d - 2 || n <= k) continue;  // below the lemma's domain
    ++out.checked;
    last_point = n;
    if (out.n0 == 0) out.n0 = n;
    if (!lemma33_holds(n, k, t, d)) {
      out.last_fail = n;
      out.n0 = n + 1;
    }
  }
  // A failure at the final scan point means no verified tail exists.
  out.found = out.checked > 0 && out.last_fail != last_point;
  if (!out.found) out.n0 = 0;
  return out;
}

bool trivially_intersecting(long n, long k, long d) {
  if (!(2 <= d && d <= k && k <= n))
    throw std::invalid_argument("requires 2 <= d <= k <= n");
  return n * (d - 1) < k * d;
}

}  // namespace ekrw
