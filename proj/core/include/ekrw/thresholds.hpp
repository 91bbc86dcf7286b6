#pragma once

#include <array>
#include <optional>
#include <string>

#include "ekrw/numbers.hpp"

namespace ekrw {

/// Exact rational bracket around the root in (0,1/2) of
/// (1-x)^(t+d-3) - x^(d-2).
struct BetaBracket {
  int t = 0, d = 0;
  Rational lo, hi, tol;
};

/// Sign of (1-x)^(t+d-3) - x^(d-2) at a rational point, evaluated exactly.
int beta_poly_sign(int t, int d, const Rational& x);

/// Bisection bracket with hi-lo <= tol and 1/(t+1) < lo < hi < 1/2.
/// Requires t >= 2, d >= 3, tol > 0.
BetaBracket beta(int t, int d, const Rational& tol);

enum class TheoremRange {
  NontrivialDWise,        // wire id Thm1.4
  NontrivialDWiseT,       // wire id Thm1.5
  NontrivialTSmallK,      // wire id Thm1.6(i)
  NontrivialTLargeK,      // wire id Thm1.6(ii)
  CompleteIntersection,   // wire id Thm1.7
  DWiseTStar,             // wire id Thm1.8
  TIntersectingStar,      // wire id Thm3.1
  TIntersectingWeak,      // wire id Thm3.2
};

inline constexpr std::array<TheoremRange, 8> kAllTheoremRanges = {
    TheoremRange::NontrivialDWise,      TheoremRange::NontrivialDWiseT,
    TheoremRange::NontrivialTSmallK,    TheoremRange::NontrivialTLargeK,
    TheoremRange::CompleteIntersection, TheoremRange::DWiseTStar,
    TheoremRange::TIntersectingStar,    TheoremRange::TIntersectingWeak,
};

/// Stable JSON/report key, e.g. "Thm1.4".
std::string theorem_range_id(TheoremRange id);

struct TheoremStatus {
  bool applies = false;
  Rational threshold;              // the range inequality's critical value
  std::optional<Rational> window_hi;  // upper end for two-sided ranges
  std::optional<BigCount> bound;   // numeric bound when applicable
  std::string bound_expr;          // human-readable bound expression
};

struct RangeClassification {
  long n = 0, k = 0, d = 0, t = 0;
  std::array<TheoremStatus, 8> status;  // indexed in kAllTheoremRanges order

  const TheoremStatus& operator[](TheoremRange id) const {
    return status[static_cast<std::size_t>(id)];
  }
};

/// Exact-rational applicability of each theorem's range condition at
/// (n,k,d,t), with the numeric bound where applicable.  Out-of-range
/// parameters make a theorem "not applicable", never an error.
RangeClassification classify_range(long n, long k, long d, long t);

/// Exact comparison C(n-t,k-t) > C(n-1,k-t-d+2).  Also evaluated through
/// the equivalent falling-product comparison; the two must agree.
/// Requires k >= t+d-2 and n > k.
bool lemma33_holds(long n, long k, long t, long d);

/// The falling-product side alone (exposed for tests).
bool lemma33_product_holds(long n, long k, long t, long d);

struct ScanResult {
  bool found = false;
  long n0 = 0;        // smallest N with no failures in [N, n_max]
  long checked = 0;   // number of scan points
  long last_fail = 0; // 0 when every point passed
};

/// Scans n in multiples of den(p) up to n_max with k = p*n, reporting the
/// smallest N after the last failure of lemma33_holds.  Requires p < 1/2.
ScanResult scan_n0(const Rational& p, long t, long d, long n_max);

/// n(d-1) < kd: below this every k-uniform family is d-wise intersecting.
bool trivially_intersecting(long n, long k, long d);

}  // namespace ekrw
